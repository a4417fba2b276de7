#pragma once

#include "charvar/bounds.hpp"
#include "charvar/certify.hpp"
#include "charvar/cxla.hpp"
#include "charvar/fox_selftest.hpp"
#include "charvar/grouprep.hpp"
#include "charvar/io.hpp"
#include "charvar/structure.hpp"
#include "charvar/tangent.hpp"
#include "charvar/words.hpp"
