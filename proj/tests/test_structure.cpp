#include <gtest/gtest.h>

#include <random>

#include "charvar/structure.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace charvar;

namespace {

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

CMatrix diag3(Complex a, Complex b, Complex c) {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

}  // namespace

TEST(SlCoordinates, BasisRoundTrip) {
  for (int n = 2; n <= 4; ++n) {
    const auto basis = sl_basis(n);
    ASSERT_EQ(static_cast<int>(basis.size()), n * n - 1);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const CVector c = sl_coords(basis[k]);
      for (Eigen::Index i = 0; i < c.size(); ++i) EXPECT_NEAR(std::abs(c(i) - (i == static_cast<Eigen::Index>(k) ? 1.0 : 0.0)), 0.0, 1e-15);
    }
  }
}

TEST(Adjoint, IsHomomorphism) {
  std::mt19937_64 rng(1);
  const CMatrix g = random_sl(3, rng), h = random_sl(3, rng);
  EXPECT_LT((adjoint(g * h) - adjoint(g) * adjoint(h)).norm(), 1e-9 * adjoint(g * h).norm());
}

TEST(CentralizerDim, Examples) {
  const auto s2 = GroupSpec::sl(2);
  EXPECT_EQ(centralizer_dim({mat2(2, 0, 0, 0.5)}, s2), 1);
  EXPECT_EQ(centralizer_dim({mat2(1, 1, 0, 1)}, s2), 1);
  for (int n = 2; n <= 4; ++n)
    EXPECT_EQ(centralizer_dim({CMatrix::Identity(n, n)}, GroupSpec::sl(n)), n * n - 1);
  EXPECT_EQ(centralizer_dim({}, GroupSpec::sl(3)), 8);
}

TEST(CentralizerDim, SteinbergMinimality) {
  std::mt19937_64 rng(2);
  for (int n : {2, 3}) {
    const auto s = GroupSpec::sl(n);
    for (int trial = 0; trial < 100; ++trial) EXPECT_GE(centralizer_dim({random_sl(n, rng)}, s), s.r() + s.z());
  }
}

TEST(CentralizerDim, IrreducibleSetHasTrivialCentralizer) {
  std::mt19937_64 rng(3);
  for (int n : {2, 3, 4}) {
    const auto s = GroupSpec::sl(n);
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<CMatrix> mats{random_sl(n, rng), random_sl(n, rng)};
      ASSERT_TRUE(is_irreducible_burnside(mats, s));
      EXPECT_EQ(centralizer_dim(mats, s), 0);
    }
  }
}

TEST(IsRegular, Examples) {
  const auto s3 = GroupSpec::sl(3);
  const Complex l(1.4, 0.2);
  EXPECT_TRUE(is_regular({diag3(l, 1.0, 1.0 / l)}, s3));
  EXPECT_FALSE(is_regular({CMatrix::Identity(3, 3), CMatrix::Identity(3, 3)}, s3));
  // Diagonal with a repeated eigenvalue: centralizer gl(2) x gl(1) in sl(3) has dim 4.
  EXPECT_FALSE(is_regular({diag3(l, l, 1.0 / (l * l))}, s3));
  const CMatrix u3 = sym_power_embedding(mat2(1, 1, 0, 1), 3);
  EXPECT_EQ(centralizer_dim({u3}, s3), 2);
  EXPECT_TRUE(is_regular({u3}, s3));
  EXPECT_THROW(is_regular({mat2(1, 1, 0, 1), mat2(1, 0, 1, 1)}, GroupSpec::sl(2)), Error);
}

TEST(Burnside, Examples) {
  const auto s2 = GroupSpec::sl(2);
  EXPECT_TRUE(is_irreducible_burnside({mat2(0, 1, 1, 0), mat2(2, 0, 0, 0.5)}, s2));
  EXPECT_FALSE(oracle::pair_reducible_2x2(mat2(0, 1, 1, 0), mat2(2, 0, 0, 0.5)));
  EXPECT_FALSE(is_irreducible_burnside({mat2(2, 0, 0, 0.5)}, s2));
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 10; ++trial)
      EXPECT_FALSE(is_irreducible_burnside({random_sl(n, rng)}, GroupSpec::sl(n)));
  EXPECT_THROW(is_irreducible_burnside({}, s2), Error);
}

TEST(Burnside, BlockTriangularIsReducible) {
  std::mt19937_64 rng(5);
  const auto s = GroupSpec::sl(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<CMatrix> mats;
    const CMatrix g = random_sl(4, rng);
    for (int k = 0; k < 3; ++k) {
      CMatrix m = gaussian_matrix(4, 4, rng);
      m.bottomLeftCorner(2, 2).setZero();
      mats.push_back(g * normalize_det(m) * inverse(g));
    }
    EXPECT_FALSE(is_irreducible_burnside(mats, s));
  }
}

TEST(Burnside, AgreesWithCommonEigenvectorOracle) {
  std::mt19937_64 rng(6);
  const auto s2 = GroupSpec::sl(2);
  int reducible_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    CMatrix a = random_sl(2, rng), b = random_sl(2, rng);
    if (trial % 2 == 1) {
      // Conjugated upper-triangular pair: shares an eigenvector.
      const CMatrix g = random_sl(2, rng);
      a(1, 0) = 0;
      b(1, 0) = 0;
      a = g * normalize_det(a) * inverse(g);
      b = g * normalize_det(b) * inverse(g);
    }
    const bool reducible = oracle::pair_reducible_2x2(a, b);
    reducible_seen += reducible;
    EXPECT_EQ(is_irreducible_burnside({a, b}, s2), !reducible) << "trial " << trial;
  }
  EXPECT_EQ(reducible_seen, 100);
}

TEST(StructureOutputs, ConjugationInvariant) {
  const auto p = fixtures::figure_eight();
  const Representation rep(GroupSpec::sl(3), fixtures::figure_eight_images(3));
  const auto base = structure_report(p, rep);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto conj = structure_report(p, rep.conjugated(random_sl_near_identity(3, rng)));
    EXPECT_EQ(conj.centralizer_dim_full_image, base.centralizer_dim_full_image);
    EXPECT_EQ(conj.peripheral_centralizer_dims, base.peripheral_centralizer_dims);
    EXPECT_EQ(conj.irreducible, base.irreducible);
    EXPECT_EQ(conj.boundary_regular, base.boundary_regular);
    EXPECT_EQ(conj.companion_words, base.companion_words);
  }
}

TEST(WordEnumeration, LengthLexOrder) {
  std::vector<Word> seen;
  for_each_reduced_word(2, 2, [&](const Word& w) {
    seen.push_back(w);
    return false;
  });
  // 4 words of length 1 and 4*3 of length 2.
  ASSERT_EQ(seen.size(), 16u);
  EXPECT_EQ(seen[0], (Word{{0, 1}}));
  EXPECT_EQ(seen[1], (Word{{0, -1}}));
  EXPECT_EQ(seen[2], (Word{{1, 1}}));
  EXPECT_EQ(seen[4], (Word{{0, 1}, {0, 1}}));
  EXPECT_EQ(seen[5], (Word{{0, 1}, {1, 1}}));
  for (const Word& w : seen) EXPECT_TRUE(is_freely_reduced(w));
}

TEST(FindCompanion, FigureEight) {
  const auto p = fixtures::figure_eight();
  const Representation rep(GroupSpec::sl(2), fixtures::figure_eight_sl2_images());
  const Word w = find_companion(p, rep, 0);
  EXPECT_LE(w.size(), 2u);
  EXPECT_EQ(p.render(w), "b");
  // Brute force: nothing earlier in the order works.
  const auto periph = peripheral_images(p.peripheral()[0], rep);
  for (const char* earlier : {"a", "A"}) {
    auto mats = periph;
    mats.push_back(evaluate_word(p.parse(earlier), rep));
    EXPECT_FALSE(is_irreducible_burnside(mats, rep.spec()));
  }
}

TEST(FindCompanion, Failures) {
  const std::vector<std::string> names{"a", "b"};
  GroupPresentation p(names, {parse_word("abAB", names)},
                      {{PeripheralKind::torus, {parse_word("a", names), parse_word("b", names)}}});
  const auto s = GroupSpec::sl(2);
  const Representation diag(s, {mat2(2, 0, 0, 0.5), mat2(3, 0, 0, 1.0 / 3)});
  EXPECT_THROW(find_companion(p, diag, 0, 4), SearchExhausted);
  const Representation trivial(s, {CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)});
  EXPECT_THROW(find_companion(p, trivial, 0, 4), SearchExhausted);
  EXPECT_THROW(find_companion(p, trivial, 1, 4), Error);
}

TEST(StructureReport, FigureEightSl2) {
  const auto p = fixtures::figure_eight();
  const Representation rep(GroupSpec::sl(2), fixtures::figure_eight_sl2_images());
  const auto r = structure_report(p, rep);
  EXPECT_TRUE(r.irreducible);
  EXPECT_TRUE(r.boundary_regular);
  EXPECT_EQ(r.centralizer_dim_full_image, 0);
  EXPECT_EQ(r.peripheral_centralizer_dims, std::vector<int>{1});
  ASSERT_EQ(r.companion_words.size(), 1u);
  EXPECT_TRUE(r.companion_words[0].has_value());
}

TEST(Peripheral, FigureEightLongitudeCommutesWithMeridian) {
  const auto p = fixtures::figure_eight();
  const Representation rep(GroupSpec::sl(2), fixtures::figure_eight_sl2_images());
  const auto imgs = peripheral_images(p.peripheral()[0], rep);
  EXPECT_LT((imgs[0] * imgs[1] - imgs[1] * imgs[0]).norm(), 1e-10);
  // Non-central: longitude is -[[1, 2 sqrt(3) i], [0, 1]].
  EXPECT_NEAR(std::abs(imgs[1](0, 1)), 2.0 * std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(std::abs(imgs[1](0, 0) + 1.0), 0.0, 1e-12);
}
