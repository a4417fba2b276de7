#include <gtest/gtest.h>

#include <random>

#include "charvar/cxla.hpp"
#include "charvar/grouprep.hpp"

using namespace charvar;

TEST(Matmul, Basics) {
  std::mt19937_64 rng(1);
  const CMatrix a = gaussian_matrix(3, 3, rng);
  EXPECT_LT((matmul(CMatrix::Identity(3, 3), a) - a).norm(), 1e-15);

  CMatrix x(2, 2), y(2, 2), want(2, 2);
  x << 0, 1, 0, 0;
  y << 0, 0, 1, 0;
  want << 1, 0, 0, 0;
  EXPECT_EQ(matmul(x, y), want);

  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix p = gaussian_matrix(3, 4, rng), q = gaussian_matrix(4, 2, rng), r = gaussian_matrix(2, 5, rng);
    EXPECT_LT((matmul(matmul(p, q), r) - matmul(p, matmul(q, r))).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_THROW(matmul(CMatrix::Zero(2, 3), CMatrix::Zero(2, 3)), Error);
}

TEST(Inverse, Basics) {
  CMatrix d(2, 2), want(2, 2);
  d << 2, 0, 0, 0.5;
  want << 0.5, 0, 0, 2;
  EXPECT_LT((inverse(d) - want).norm(), 1e-15);
  EXPECT_LT((inverse(CMatrix::Identity(4, 4)) - CMatrix::Identity(4, 4)).norm(), 1e-15);

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = CMatrix::Identity(3, 3) + gaussian_matrix(3, 3, rng, 0.3);
    EXPECT_LT((a * inverse(a) - CMatrix::Identity(3, 3)).norm(), 1e-10);
  }
  EXPECT_THROW(inverse(CMatrix::Zero(2, 2)), Error);
  CMatrix sing(2, 2);
  sing << 1, 2, 2, 4;
  EXPECT_THROW(inverse(sing), Error);
  EXPECT_THROW(inverse(CMatrix::Zero(2, 3)), Error);
}

TEST(SvdRank, Examples) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(svd_rank(CMatrix::Identity(n, n)), n);
  EXPECT_EQ(svd_rank(CMatrix::Zero(4, 3)), 0);
  EXPECT_EQ(svd_rank(CMatrix(0, 5)), 0);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const CVector u = gaussian_matrix(5, 1, rng), v = gaussian_matrix(4, 1, rng);
    EXPECT_EQ(svd_rank(u * v.transpose()), 1);
  }
}

TEST(SvdRank, NullspaceConsistency) {
  std::mt19937_64 rng(4);
  EXPECT_EQ(nullspace_dim(CMatrix::Identity(3, 3)), 0);
  EXPECT_EQ(nullspace_dim(CMatrix::Zero(2, 7)), 7);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 1 + trial % 4;
    const CMatrix a = gaussian_matrix(6, k, rng) * gaussian_matrix(k, 5, rng);
    EXPECT_EQ(nullspace_dim(a) + svd_rank(a), 5);
    EXPECT_EQ(svd_rank(a), std::min(k, 5));
  }
}

TEST(SvdRank, UnitaryInvariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 1 + trial % 5;
    const CMatrix a = gaussian_matrix(5, k, rng) * gaussian_matrix(k, 5, rng);
    const CMatrix u = random_special_unitary(5, rng), v = random_special_unitary(5, rng);
    EXPECT_EQ(svd_rank(u * a), svd_rank(a));
    EXPECT_EQ(svd_rank(a * v), svd_rank(a));
    EXPECT_EQ(svd_rank(u * a * v), svd_rank(a));
  }
}

TEST(SvdRank, MonotoneInTolerance) {
  Eigen::VectorXd sv(6);
  sv << 1, 1e-2, 1e-4, 1e-6, 1e-9, 1e-13;
  std::mt19937_64 rng(6);
  const CMatrix a = random_special_unitary(6, rng) * sv.cast<Complex>().asDiagonal() * random_special_unitary(6, rng);
  int previous = 7;
  for (double tol : {0.0, 1e-14, 1e-12, 1e-10, 1e-8, 1e-5, 1e-3, 1e-1, 2.0}) {
    const int r = svd_rank(a, tol);
    EXPECT_LE(r, previous);
    previous = r;
  }
  EXPECT_EQ(svd_rank(a, 1e-8), 4);
  EXPECT_EQ(svd_rank(a, 2.0), 0);
  EXPECT_THROW(svd_rank(a, -1.0), Error);
}

TEST(SvdRank, BlockDiagonalAdditivity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int k1 = 1 + trial % 3, k2 = 1 + (trial / 3) % 3;
    const CMatrix b1 = gaussian_matrix(3, k1, rng) * gaussian_matrix(k1, 3, rng);
    const CMatrix b2 = gaussian_matrix(4, k2, rng) * gaussian_matrix(k2, 4, rng);
    CMatrix full = CMatrix::Zero(7, 7);
    full.topLeftCorner(3, 3) = b1;
    full.bottomRightCorner(4, 4) = b2;
    EXPECT_EQ(svd_rank(full), svd_rank(b1) + svd_rank(b2));
  }
}

TEST(RankInfo, Margin) {
  Eigen::VectorXd sv(3);
  sv << 1.0, 1e-3, 1e-12;
  const RankInfo info = rank_info_from_singular_values(sv, 1e-8);
  EXPECT_EQ(info.rank, 2);
  EXPECT_NEAR(info.margin, 1e9, 1.0);
  EXPECT_TRUE(std::isinf(rank_info(CMatrix::Identity(3, 3)).margin));
}

TEST(LeastSquaresStep, Examples) {
  std::mt19937_64 rng(8);
  const CVector v = gaussian_matrix(4, 1, rng);
  EXPECT_LT((least_squares_step(CMatrix::Identity(4, 4), v) + v).norm(), 1e-14);
  EXPECT_EQ(least_squares_step(CMatrix::Zero(4, 3), v), CVector::Zero(3));

  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix j = gaussian_matrix(8, 3, rng);
    const CVector r = gaussian_matrix(8, 1, rng);
    const CVector x = least_squares_step(j, r);
    // Normal equations: J^H (J x + r) = 0.
    EXPECT_LT((j.adjoint() * (j * x + r)).norm(), 1e-10);
  }
}

TEST(LeastSquaresStep, MinimumNormOnRankDeficient) {
  std::mt19937_64 rng(9);
  const CMatrix j = gaussian_matrix(3, 2, rng) * gaussian_matrix(2, 5, rng);
  const CVector r = j * CVector(gaussian_matrix(5, 1, rng));
  const CVector x = least_squares_step(j, r);
  EXPECT_LT((j * x + r).norm(), 1e-10);
  // Minimum norm: x lies in the row space, i.e. orthogonal to the nullspace.
  Eigen::JacobiSVD<CMatrix> svd(j, Eigen::ComputeFullV);
  for (int k = 2; k < 5; ++k) EXPECT_LT(std::abs(svd.matrixV().col(k).dot(x)), 1e-10);
}
