#pragma once
//
// Dense complex linear algebra: products, inverses, SVD-based numerical rank and
// minimum-norm least-squares steps. Rank decisions use a relative threshold:
// a singular value s is kept when s > tol * s_max.
//

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <limits>
#include <vector>

#include "charvar/words.hpp"

namespace charvar {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kDefaultRankTol = 1e-8;

inline bool all_finite(const CMatrix& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Complex v = a.data()[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

inline CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matmul: dimension mismatch");
  return a * b;
}

/// Singular values in non-increasing order. Empty matrices have none.
inline Eigen::VectorXd singular_values(const CMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return Eigen::VectorXd(0);
  return Eigen::JacobiSVD<CMatrix>(a).singularValues();
}

/// Outcome of a thresholded rank decision.
struct RankInfo {
  int rank = 0;
  /// Smallest kept over largest dropped singular value; +inf when either side is
  /// empty or every dropped value is exactly zero.
  double margin = std::numeric_limits<double>::infinity();
};

inline RankInfo rank_info_from_singular_values(const Eigen::VectorXd& sv, double tol) {
  RankInfo info;
  if (sv.size() == 0 || sv(0) <= 0.0) return info;
  const double cut = tol * sv(0);
  double smallest_kept = 0.0, largest_dropped = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) {
      ++info.rank;
      smallest_kept = sv(i);
    } else {
      largest_dropped = std::max(largest_dropped, sv(i));
    }
  }
  if (largest_dropped > 0.0) info.margin = smallest_kept / largest_dropped;
  return info;
}

inline RankInfo rank_info(const CMatrix& a, double tol = kDefaultRankTol) {
  if (tol < 0) throw Error("svd_rank: tolerance must be nonnegative");
  return rank_info_from_singular_values(singular_values(a), tol);
}

inline int svd_rank(const CMatrix& a, double tol = kDefaultRankTol) {
  return rank_info(a, tol).rank;
}

inline int nullspace_dim(const CMatrix& a, double tol = kDefaultRankTol) {
  return static_cast<int>(a.cols()) - svd_rank(a, tol);
}

/// Inverse of a square matrix; rejects inputs whose condition number exceeds 1/tol.
inline CMatrix inverse(const CMatrix& a, double tol = 1e-12) {
  if (a.rows() != a.cols() || a.rows() == 0) throw Error("inverse: matrix must be square and nonempty");
  const Eigen::VectorXd sv = singular_values(a);
  if (!(sv(sv.size() - 1) > tol * sv(0))) throw Error("inverse: matrix is singular to tolerance");
  return a.partialPivLu().inverse();
}

/// Minimum-norm x solving J x = -residual in the least-squares sense, using the
/// pseudoinverse truncated with the same relative rule as svd_rank.
inline CVector least_squares_step(const CMatrix& jac, const CVector& residual,
                                  double tol = kDefaultRankTol) {
  if (jac.rows() != residual.size()) throw Error("least_squares_step: dimension mismatch");
  CVector x = CVector::Zero(jac.cols());
  if (jac.rows() == 0 || jac.cols() == 0) return x;
  Eigen::JacobiSVD<CMatrix> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv(0) <= 0.0) return x;
  const double cut = tol * sv(0);
  const CVector utr = svd.matrixU().adjoint() * residual;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) x -= svd.matrixV().col(i) * (utr(i) / sv(i));
  return x;
}

}  // namespace charvar
