#pragma once
//
// Hypothesis checks on the image of a representation: Lie-algebra centralizer
// dimension, regularity of peripheral subgroups, irreducibility and the search
// for a companion element making a peripheral subgroup irreducible.
//

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "charvar/cxla.hpp"
#include "charvar/grouprep.hpp"
#include "charvar/words.hpp"

namespace charvar {

// ---------------------------------------------------------------------------
// sl(n) coordinates
// ---------------------------------------------------------------------------

/// Basis of sl(n): off-diagonal units E_ij (i != j, row-major) followed by
/// H_k = E_kk - E_{k+1,k+1}, k = 0..n-2.
inline std::vector<CMatrix> sl_basis(int n) {
  std::vector<CMatrix> basis;
  basis.reserve(static_cast<std::size_t>(n * n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        CMatrix e = CMatrix::Zero(n, n);
        e(i, j) = 1.0;
        basis.push_back(std::move(e));
      }
  for (int k = 0; k + 1 < n; ++k) {
    CMatrix h = CMatrix::Zero(n, n);
    h(k, k) = 1.0;
    h(k + 1, k + 1) = -1.0;
    basis.push_back(std::move(h));
  }
  return basis;
}

/// Coordinates of a trace-zero matrix in sl_basis(n). The trace part of a general
/// matrix is discarded.
inline CVector sl_coords(const CMatrix& x) {
  const int n = static_cast<int>(x.rows());
  CVector c(n * n - 1);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) c(idx++) = x(i, j);
  const Complex mean = x.trace() / static_cast<double>(n);
  Complex partial = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    partial += x(k, k) - mean;
    c(idx++) = partial;
  }
  return c;
}

/// Matrix of X -> g X g^-1 on sl(n) in sl_basis coordinates.
inline CMatrix adjoint(const CMatrix& g, const CMatrix& g_inv) {
  const int n = static_cast<int>(g.rows());
  const auto basis = sl_basis(n);
  CMatrix ad(n * n - 1, n * n - 1);
  for (std::size_t k = 0; k < basis.size(); ++k)
    ad.col(static_cast<Eigen::Index>(k)) = sl_coords(g * basis[k] * g_inv);
  return ad;
}

inline CMatrix adjoint(const CMatrix& g) { return adjoint(g, inverse(g)); }

// ---------------------------------------------------------------------------
// Centralizers and regularity
// ---------------------------------------------------------------------------

/// Stacked operator X -> [X, A_i] / ||A_i|| from sl(n) into (gl(n))^k.
inline CMatrix commutator_operator(const std::vector<CMatrix>& mats, int n) {
  const auto basis = sl_basis(n);
  const int d = n * n - 1;
  CMatrix op = CMatrix::Zero(static_cast<Eigen::Index>(mats.size()) * n * n, d);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const CMatrix& a = mats[i];
    if (a.rows() != n || a.cols() != n) throw Error("centralizer_dim: matrix has the wrong size");
    const double scale = a.norm() > 0 ? a.norm() : 1.0;
    for (int k = 0; k < d; ++k) {
      const CMatrix c = (basis[static_cast<std::size_t>(k)] * a - a * basis[static_cast<std::size_t>(k)]) / scale;
      op.block(static_cast<Eigen::Index>(i) * n * n, k, n * n, 1) =
          Eigen::Map<const CVector>(c.data(), n * n);
    }
  }
  return op;
}

struct CentralizerInfo {
  int dim = 0;
  double margin = std::numeric_limits<double>::infinity();
};

inline CentralizerInfo centralizer_info(const std::vector<CMatrix>& mats, const GroupSpec& spec,
                                        double tol = kDefaultRankTol) {
  const RankInfo ri = rank_info(commutator_operator(mats, spec.n()), tol);
  return {spec.d() - ri.rank, ri.margin};
}

/// dim { X in sl(n) : X A_i = A_i X for all i }.
inline int centralizer_dim(const std::vector<CMatrix>& mats, const GroupSpec& spec,
                           double tol = kDefaultRankTol) {
  return centralizer_info(mats, spec, tol).dim;
}

inline constexpr double kDefaultCommuteTol = 1e-8;

inline bool commute(const CMatrix& a, const CMatrix& b, double tol = kDefaultCommuteTol) {
  return (a * b - b * a).norm() <= tol * std::max(1.0, a.norm() * b.norm());
}

/// True iff the commutative group generated by the inputs has centralizer of the
/// minimal dimension r + z. Throws if the inputs do not pairwise commute.
inline bool is_regular(const std::vector<CMatrix>& peripheral_images, const GroupSpec& spec,
                       double tol = kDefaultRankTol, double commute_tol = kDefaultCommuteTol) {
  for (std::size_t i = 0; i < peripheral_images.size(); ++i)
    for (std::size_t j = i + 1; j < peripheral_images.size(); ++j)
      if (!commute(peripheral_images[i], peripheral_images[j], commute_tol))
        throw Error("is_regular: peripheral images do not commute");
  return centralizer_dim(peripheral_images, spec, tol) == spec.r() + spec.z();
}

// ---------------------------------------------------------------------------
// Irreducibility
// ---------------------------------------------------------------------------

/// Dimension of the associative algebra generated by the inputs (together with I),
/// grown by left multiplication until the span stops growing or 2n^2 rounds pass.
inline int generated_algebra_dim(const std::vector<CMatrix>& mats, int n, double tol = kDefaultRankTol) {
  const int full = n * n;
  std::vector<CVector> basis;
  std::vector<CMatrix> frontier;

  auto try_add = [&](const CMatrix& m) {
    const double norm = m.norm();
    if (norm == 0.0) return;
    CVector v = Eigen::Map<const CVector>(m.data(), full) / norm;
    for (int pass = 0; pass < 2; ++pass)
      for (const CVector& q : basis) v -= q * q.dot(v);
    const double rest = v.norm();
    if (rest > tol) {
      basis.push_back(v / rest);
      frontier.push_back(m / norm);
    }
  };

  std::vector<CMatrix> gens;
  for (const CMatrix& m : mats) {
    if (m.rows() != n || m.cols() != n) throw Error("generated_algebra_dim: matrix has the wrong size");
    gens.push_back(m.norm() > 0 ? CMatrix(m / m.norm()) : m);
  }
  try_add(CMatrix::Identity(n, n));
  for (const CMatrix& g : gens) try_add(g);

  for (int round = 0; round < 2 * full && !frontier.empty() && static_cast<int>(basis.size()) < full;
       ++round) {
    std::vector<CMatrix> current;
    current.swap(frontier);
    for (const CMatrix& m : current)
      for (const CMatrix& g : gens) {
        try_add(g * m);
        if (static_cast<int>(basis.size()) == full) return full;
      }
  }
  return static_cast<int>(basis.size());
}

/// Burnside criterion: the inputs have no common proper invariant subspace iff the
/// algebra they generate is all of M_n(C).
inline bool is_irreducible_burnside(const std::vector<CMatrix>& mats, const GroupSpec& spec,
                                    double tol = kDefaultRankTol) {
  if (mats.empty()) throw Error("is_irreducible_burnside: empty matrix list");
  const int n = spec.n();
  return generated_algebra_dim(mats, n, tol) == n * n;
}

// ---------------------------------------------------------------------------
// Companion search
// ---------------------------------------------------------------------------

/// Thrown when a bounded search exhausts its space. This bounds the search only.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

inline constexpr int kDefaultCompanionMaxLen = 6;

/// Calls visit(w) on every nonempty freely reduced word of length <= max_len, in
/// length-lexicographic order with letters ordered g0, g0^-1, g1, g1^-1, ...
/// Stops early once visit returns true.
inline bool for_each_reduced_word(int num_generators, int max_len,
                                  const std::function<bool(const Word&)>& visit) {
  Word w;
  std::function<bool(int)> extend = [&](int remaining) -> bool {
    if (remaining == 0) return visit(w);
    for (int g = 0; g < num_generators; ++g)
      for (int s : {1, -1}) {
        const Letter l{g, s};
        if (!w.empty() && cancels(w.back(), l)) continue;
        w.push_back(l);
        const bool done = extend(remaining - 1);
        w.pop_back();
        if (done) return true;
      }
    return false;
  };
  for (int len = 1; len <= max_len; ++len)
    if (extend(len)) return true;
  return false;
}

inline std::vector<CMatrix> peripheral_images(const PeripheralSpec& ps, const Representation& rep) {
  std::vector<CMatrix> out;
  for (const Word& w : ps.words) out.push_back(evaluate_word(w, rep));
  return out;
}

/// First word gamma (length-lex order) such that the images of the given torus
/// peripheral subgroup together with rho(gamma) act irreducibly.
inline Word find_companion(const GroupPresentation& p, const Representation& rep, int torus_index,
                           int max_len = kDefaultCompanionMaxLen, double tol = kDefaultRankTol) {
  const auto tori = p.torus_indices();
  if (torus_index < 0 || torus_index >= static_cast<int>(tori.size()))
    throw Error("find_companion: no torus peripheral marking with index " + std::to_string(torus_index));
  const auto base = peripheral_images(p.peripheral()[static_cast<std::size_t>(tori[static_cast<std::size_t>(torus_index)])], rep);
  Word found;
  const bool ok = for_each_reduced_word(p.num_generators(), max_len, [&](const Word& w) {
    auto mats = base;
    mats.push_back(evaluate_word(w, rep));
    if (!is_irreducible_burnside(mats, rep.spec(), tol)) return false;
    found = w;
    return true;
  });
  if (!ok)
    throw SearchExhausted("find_companion: no companion word of length <= " + std::to_string(max_len) +
                          " for torus " + std::to_string(torus_index));
  return found;
}

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

struct StructureReport {
  int centralizer_dim_full_image = 0;
  double centralizer_margin = std::numeric_limits<double>::infinity();
  std::vector<int> peripheral_centralizer_dims;  // one per torus marking
  bool irreducible = false;
  bool boundary_regular = false;
  std::vector<std::optional<Word>> companion_words;  // one per torus marking
  std::string irreducibility_checked =
      "irreducible (no proper invariant subspace); strong irreducibility and Zariski density not checked";
};

inline StructureReport structure_report(const GroupPresentation& p, const Representation& rep,
                                        double tol = kDefaultRankTol,
                                        int companion_max_len = kDefaultCompanionMaxLen) {
  StructureReport rpt;
  const GroupSpec& spec = rep.spec();
  const CentralizerInfo full = centralizer_info(rep.images(), spec, tol);
  rpt.centralizer_dim_full_image = full.dim;
  rpt.centralizer_margin = full.margin;
  rpt.irreducible = is_irreducible_burnside(rep.images(), spec, tol);

  rpt.boundary_regular = true;
  const auto tori = p.torus_indices();
  for (std::size_t t = 0; t < tori.size(); ++t) {
    const auto imgs = peripheral_images(p.peripheral()[static_cast<std::size_t>(tori[t])], rep);
    const bool regular = is_regular(imgs, spec, tol);
    rpt.peripheral_centralizer_dims.push_back(centralizer_dim(imgs, spec, tol));
    rpt.boundary_regular = rpt.boundary_regular && regular;
  }
  for (std::size_t t = 0; t < tori.size(); ++t) {
    std::optional<Word> w;
    if (rpt.irreducible) {
      try {
        w = find_companion(p, rep, static_cast<int>(t), companion_max_len, tol);
      } catch (const SearchExhausted&) {
      }
    }
    rpt.companion_words.push_back(std::move(w));
  }
  return rpt;
}

}  // namespace charvar
