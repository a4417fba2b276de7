#pragma once
//
// Fox calculus and local dimensions of Hom(Gamma, SL(n)).
//
// Tangent vectors at rho are encoded by left translation: a first-order
// deformation A_j -> (I + eps X_j) A_j with X_j in sl(n). In these coordinates the
// differential of the relator map r is X -> sum_j Ad(rho(dr/dg_j)) X_j, so the
// kernel of the stacked Fox blocks is the cocycle space Z^1(Gamma, Ad rho).
//

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "charvar/cxla.hpp"
#include "charvar/grouprep.hpp"
#include "charvar/structure.hpp"
#include "charvar/words.hpp"

namespace charvar {

namespace detail {

/// Ad(rho(g)) and Ad(rho(g)^-1) for every generator.
struct AdjointCache {
  std::vector<CMatrix> pos, neg;

  explicit AdjointCache(const Representation& rep) {
    for (const CMatrix& a : rep.images()) {
      const CMatrix ai = inverse(a);
      pos.push_back(adjoint(a, ai));
      neg.push_back(adjoint(ai, a));
    }
  }

  const CMatrix& of(const Letter& l) const {
    return l.sign > 0 ? pos.at(static_cast<std::size_t>(l.gen)) : neg.at(static_cast<std::size_t>(l.gen));
  }
};

inline CMatrix fox_matrix(const Word& w, int gen, const AdjointCache& ad, int d) {
  // Right-to-left recursion on suffixes:
  //   d(g v)/dg      = 1 + Ad(g) dv/dg
  //   d(g^-1 v)/dg   = -Ad(g^-1) + Ad(g^-1) dv/dg
  //   d(h v)/dg      = Ad(h) dv/dg          (h != g^{+-1})
  CMatrix acc = CMatrix::Zero(d, d);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const CMatrix& a = ad.of(*it);
    acc = a * acc;
    if (it->gen == gen) {
      if (it->sign > 0)
        acc += CMatrix::Identity(d, d);
      else
        acc -= a;
    }
  }
  return acc;
}

}  // namespace detail

/// Fox derivative dw/dg evaluated through Ad(rho), as a d x d operator on sl(n).
inline CMatrix fox_matrix(const Word& w, int gen, const Representation& rep) {
  if (gen < 0 || gen >= rep.size()) throw Error("fox_matrix: generator index out of range");
  return detail::fox_matrix(w, gen, detail::AdjointCache(rep), rep.spec().d());
}

/// Block matrix (d*m2 x d*m1) whose (i,j) block is fox_matrix(r_i, g_j).
inline CMatrix relator_jacobian(const GroupPresentation& p, const Representation& rep) {
  if (rep.size() != p.num_generators()) throw Error("relator_jacobian: image count differs from m1");
  const int d = rep.spec().d();
  const int m1 = p.num_generators(), m2 = p.num_relators();
  CMatrix jac = CMatrix::Zero(static_cast<Eigen::Index>(d) * m2, static_cast<Eigen::Index>(d) * m1);
  if (m2 == 0) return jac;
  const detail::AdjointCache ad(rep);
  for (int i = 0; i < m2; ++i)
    for (int j = 0; j < m1; ++j)
      jac.block(i * d, j * d, d, d) = detail::fox_matrix(p.relators()[static_cast<std::size_t>(i)], j, ad, d);
  return jac;
}

// ---------------------------------------------------------------------------
// Newton refinement onto Hom(Gamma, SL(n))
// ---------------------------------------------------------------------------

class NewtonError : public Error {
 public:
  NewtonError(const std::string& what, double last_residual, int iterations)
      : Error(what), last_residual_(last_residual), iterations_(iterations) {}
  double last_residual() const { return last_residual_; }
  int iterations() const { return iterations_; }

 private:
  double last_residual_;
  int iterations_;
};

struct NewtonOptions {
  double tol_residual = 1e-12;
  int max_iter = 50;
  double entry_guard = 1e-2;
  double rank_tol = kDefaultRankTol;
};

struct NewtonResult {
  Representation rep;
  int iterations = 0;
  double residual = 0.0;
};

namespace detail {

/// Residual vector of the ambient system: entries of rho(r_i) - I, then det(A_j) - 1.
inline CVector ambient_residual(const GroupPresentation& p, const std::vector<CMatrix>& imgs, int n) {
  const int nn = n * n;
  const int m1 = static_cast<int>(imgs.size()), m2 = p.num_relators();
  CVector f(static_cast<Eigen::Index>(nn) * m2 + m1);
  const Representation rep(GroupSpec::sl(n), imgs, std::numeric_limits<double>::infinity());
  for (int i = 0; i < m2; ++i) {
    const CMatrix e = evaluate_word(p.relators()[static_cast<std::size_t>(i)], rep) - CMatrix::Identity(n, n);
    f.segment(static_cast<Eigen::Index>(i) * nn, nn) = Eigen::Map<const CVector>(e.data(), nn);
  }
  for (int j = 0; j < m1; ++j) f(static_cast<Eigen::Index>(nn) * m2 + j) = imgs[static_cast<std::size_t>(j)].determinant() - 1.0;
  return f;
}

/// Jacobian of ambient_residual with respect to all matrix entries (column-major per image).
inline CMatrix ambient_jacobian(const GroupPresentation& p, const std::vector<CMatrix>& imgs, int n) {
  const int nn = n * n;
  const int m1 = static_cast<int>(imgs.size()), m2 = p.num_relators();
  CMatrix jac = CMatrix::Zero(static_cast<Eigen::Index>(nn) * m2 + m1, static_cast<Eigen::Index>(nn) * m1);
  std::vector<CMatrix> inv;
  for (const CMatrix& a : imgs) inv.push_back(inverse(a));
  const CMatrix id = CMatrix::Identity(n, n);

  for (int i = 0; i < m2; ++i) {
    const Word& r = p.relators()[static_cast<std::size_t>(i)];
    const std::size_t len = r.size();
    auto mat = [&](const Letter& l) -> const CMatrix& {
      return l.sign > 0 ? imgs[static_cast<std::size_t>(l.gen)] : inv[static_cast<std::size_t>(l.gen)];
    };
    std::vector<CMatrix> prefix(len + 1, id), suffix(len + 1, id);
    for (std::size_t q = 0; q < len; ++q) prefix[q + 1] = prefix[q] * mat(r[q]);
    for (std::size_t q = len; q-- > 0;) suffix[q] = mat(r[q]) * suffix[q + 1];

    for (std::size_t q = 0; q < len; ++q) {
      const Letter& l = r[q];
      CMatrix left = prefix[q], right = suffix[q + 1];
      double sign = 1.0;
      if (l.sign < 0) {
        // d(A^-1) = -A^-1 dA A^-1
        left = left * inv[static_cast<std::size_t>(l.gen)];
        right = inv[static_cast<std::size_t>(l.gen)] * right;
        sign = -1.0;
      }
      for (int col = 0; col < n; ++col)
        for (int row = 0; row < n; ++row) {
          const CMatrix dr = sign * left.col(row) * right.row(col);
          jac.block(static_cast<Eigen::Index>(i) * nn, static_cast<Eigen::Index>(l.gen) * nn + row + col * n, nn, 1) +=
              Eigen::Map<const CVector>(dr.data(), nn);
        }
    }
  }
  for (int j = 0; j < m1; ++j) {
    const Complex det = imgs[static_cast<std::size_t>(j)].determinant();
    const CMatrix& ai = inv[static_cast<std::size_t>(j)];
    for (int col = 0; col < n; ++col)
      for (int row = 0; row < n; ++row)
        jac(static_cast<Eigen::Index>(nn) * m2 + j, static_cast<Eigen::Index>(j) * nn + row + col * n) = det * ai(col, row);
  }
  return jac;
}

}  // namespace detail

/// Gauss-Newton with minimum-norm steps onto the relator variety. Each iterate is
/// re-projected to determinant 1.
inline NewtonResult newton_refine(const GroupPresentation& p, const Representation& rep,
                                  const NewtonOptions& opt = {}) {
  if (rep.size() != p.num_generators()) throw Error("newton_refine: image count differs from m1");
  const int n = rep.spec().n();
  const int nn = n * n;
  double res = relator_residual(p, rep);
  if (res < opt.tol_residual) return {rep, 0, res};
  if (!(res < opt.entry_guard))
    throw NewtonError("newton_refine: starting residual " + std::to_string(res) + " is outside the entry guard",
                      res, 0);

  std::vector<CMatrix> imgs = rep.images();
  for (int it = 1; it <= opt.max_iter; ++it) {
    const CVector f = detail::ambient_residual(p, imgs, n);
    const CMatrix jac = detail::ambient_jacobian(p, imgs, n);
    const CVector step = least_squares_step(jac, f, opt.rank_tol);
    for (std::size_t j = 0; j < imgs.size(); ++j) {
      CMatrix delta = Eigen::Map<const CMatrix>(step.data() + static_cast<Eigen::Index>(j) * nn, n, n);
      imgs[j] = normalize_det(imgs[j] + delta);
    }
    if (!std::all_of(imgs.begin(), imgs.end(), [](const CMatrix& m) { return all_finite(m); })) break;
    Representation current(rep.spec(), imgs);
    res = relator_residual(p, current);
    if (res < opt.tol_residual) return {std::move(current), it, res};
  }
  throw NewtonError("newton_refine: no convergence within " + std::to_string(opt.max_iter) +
                        " iterations (last residual " + std::to_string(res) + ")",
                    res, opt.max_iter);
}

// ---------------------------------------------------------------------------
// Tangent report
// ---------------------------------------------------------------------------

inline constexpr double kCertifiedResidual = 1e-9;
inline constexpr double kMinReliableMargin = 10.0;

struct TangentReport {
  int jacobian_rank = 0;
  int dim_Z1 = 0;
  int dim_B1 = 0;
  int dim_H1 = 0;
  int deficiency_floor = 0;
  /// Worst singular-value gap over the Jacobian and full-image centralizer rank decisions.
  double singular_values_margin = std::numeric_limits<double>::infinity();
  bool reliable = true;
};

inline TangentReport tangent_report(const GroupPresentation& p, const Representation& rep,
                                    double tol = kDefaultRankTol, double residual_bound = kCertifiedResidual) {
  const double res = relator_residual(p, rep);
  if (!(res < residual_bound))
    throw Error("tangent_report: relator residual " + std::to_string(res) + " exceeds the certification bound");
  const GroupSpec& spec = rep.spec();
  const int d = spec.d();
  const RankInfo jr = rank_info(relator_jacobian(p, rep), tol);
  const CentralizerInfo cent = centralizer_info(rep.images(), spec, tol);

  TangentReport t;
  t.jacobian_rank = jr.rank;
  t.dim_Z1 = d * p.num_generators() - jr.rank;
  t.dim_B1 = d - cent.dim;
  t.dim_H1 = t.dim_Z1 - t.dim_B1;
  t.deficiency_floor = d * (p.num_generators() - p.num_relators());
  t.singular_values_margin = std::min(jr.margin, cent.margin);
  t.reliable = t.singular_values_margin >= kMinReliableMargin;
  return t;
}

}  // namespace charvar
