#pragma once
// Shared fixtures: the figure-eight knot group and its geometric representations.

#include <cmath>

#include "charvar/charvar.hpp"

namespace fixtures {

using namespace charvar;

/// <a,b | a W = W b>, W = b a^-1 b^-1 a; peripheral torus (meridian a, longitude bABaaBAb).
inline GroupPresentation figure_eight() {
  const std::vector<std::string> names{"a", "b"};
  return GroupPresentation(names, {parse_word("abABaBAbaB", names)},
                           {{PeripheralKind::torus, {parse_word("a", names), parse_word("bABaaBAb", names)}}});
}

inline Complex omega() { return std::polar(1.0, 2.0 * M_PI / 3.0); }

/// Parabolic holonomy a -> [[1,1],[0,1]], b -> [[1,0],[-omega,1]].
inline std::vector<CMatrix> figure_eight_sl2_images() {
  CMatrix a(2, 2), b(2, 2);
  a << 1, 1, 0, 1;
  b << 1, 0, -omega(), 1;
  return {a, b};
}

inline std::vector<CMatrix> figure_eight_images(int n) {
  std::vector<CMatrix> out;
  for (const CMatrix& m : figure_eight_sl2_images()) out.push_back(sym_power_embedding(m, n));
  return out;
}

inline InputDocument figure_eight_doc(int n) {
  return InputDocument{.spec = GroupSpec::sl(n), .presentation = figure_eight(), .images = figure_eight_images(n)};
}

inline InputDocument handlebody_doc(int k, int n, std::uint64_t seed) {
  const auto p = free_group_presentation(k);
  const auto spec = GroupSpec::sl(n);
  return InputDocument{.spec = spec, .presentation = p, .images = random_representation(p, spec, seed).images()};
}

/// Z^2 = <a,b | [a,b]> at a regular diagonal pair, peripheral torus (a, b).
inline InputDocument torus_group_doc(Complex lambda, Complex mu) {
  const std::vector<std::string> names{"a", "b"};
  GroupPresentation p(names, {parse_word("abAB", names)},
                      {{PeripheralKind::torus, {parse_word("a", names), parse_word("b", names)}}});
  CMatrix a = CMatrix::Zero(2, 2), b = CMatrix::Zero(2, 2);
  a(0, 0) = lambda;
  a(1, 1) = 1.0 / lambda;
  b(0, 0) = mu;
  b(1, 1) = 1.0 / mu;
  return InputDocument{.spec = GroupSpec::sl(2), .presentation = std::move(p), .images = {a, b}};
}

}  // namespace fixtures
