#pragma once
//
// Closed-form dimension formulas. Exact integer arithmetic throughout.
//

#include <string>

#include "charvar/grouprep.hpp"

namespace charvar {

/// Topological input to the bound: torus boundary count t and Euler characteristic chi.
struct ManifoldData {
  int torus_count = 0;
  int euler_characteristic = 0;
};

struct BoundReport {
  int general_bound = 0;
  std::string formula_used;
  int t = 0, chi = 0, d = 0, r = 0, z = 0;
};

/// r*t - d*chi + z: lower bound for dim X_0 at a strongly irreducible, boundary
/// regular representation.
inline int thurston_bound(const ManifoldData& m, const GroupSpec& spec) {
  if (m.torus_count < 0) throw Error("thurston_bound: torus count must be nonnegative");
  return spec.r() * m.torus_count - spec.d() * m.euler_characteristic + spec.z();
}

/// (n-1)*t - (n^2-1)*chi.
inline int sl_n_bound(const ManifoldData& m, int n) {
  if (n < 2) throw Error("sl_n_bound: n must be at least 2");
  if (m.torus_count < 0) throw Error("sl_n_bound: torus count must be nonnegative");
  return (n - 1) * m.torus_count - (n * n - 1) * m.euler_characteristic;
}

/// -d*chi + z, the bound when no boundary component is a torus.
inline int no_torus_bound(int euler_characteristic, const GroupSpec& spec) {
  return -spec.d() * euler_characteristic + spec.z();
}

/// Tangent dimension (2g-1)*d + z of Hom(pi_1(S_g), G) at any representation.
inline int goldman_dim(int genus, const GroupSpec& spec) {
  if (genus < 1) throw Error("goldman_dim: genus must be at least 1");
  return (2 * genus - 1) * spec.d() + spec.z();
}

/// dim R_0 - d + z.
inline int hom_to_char_drop(int dim_r0, const GroupSpec& spec) {
  if (dim_r0 < 0) throw Error("hom_to_char_drop: dimension must be nonnegative");
  return dim_r0 - spec.d() + spec.z();
}

/// d - r, the codimension spent per torus when the condition rho(delta) = 1 is
/// imposed on a genus-2 surface group representation.
inline int surface_restriction_codim(const GroupSpec& spec) { return spec.d() - spec.r(); }

inline BoundReport bound_report(const ManifoldData& m, const GroupSpec& spec) {
  BoundReport b;
  b.general_bound = thurston_bound(m, spec);
  b.formula_used = m.torus_count > 0 ? "r*t - d*chi + z" : "-d*chi + z (no torus boundary)";
  b.t = m.torus_count;
  b.chi = m.euler_characteristic;
  b.d = spec.d();
  b.r = spec.r();
  b.z = spec.z();
  return b;
}

}  // namespace charvar
