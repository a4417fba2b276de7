#pragma once
//
// Central finite-difference check of the Fox-calculus Jacobian. The difference
// quotient only uses evaluate_word, so it is independent of the Fox recursion.
//

#include <cstdint>
#include <random>
#include <vector>

#include "charvar/grouprep.hpp"
#include "charvar/structure.hpp"
#include "charvar/tangent.hpp"

namespace charvar {

inline constexpr double kFiniteDifferenceStep = 1e-7;

/// Jacobian of the relator map in left-translation sl(n) coordinates, by central
/// differences: column (j,k) is d/dh rho_h(r_i) rho(r_i)^-1 with A_j -> (I + h E_k) A_j.
inline CMatrix finite_difference_jacobian(const GroupPresentation& p, const Representation& rep,
                                          double step = kFiniteDifferenceStep) {
  const int n = rep.spec().n();
  const int d = rep.spec().d();
  const int m1 = p.num_generators(), m2 = p.num_relators();
  const auto basis = sl_basis(n);
  const CMatrix id = CMatrix::Identity(n, n);
  CMatrix jac = CMatrix::Zero(static_cast<Eigen::Index>(d) * m2, static_cast<Eigen::Index>(d) * m1);

  auto shifted = [&](int gen, int k, double h) {
    std::vector<CMatrix> imgs = rep.images();
    imgs[static_cast<std::size_t>(gen)] = (id + h * basis[static_cast<std::size_t>(k)]) * imgs[static_cast<std::size_t>(gen)];
    return Representation(rep.spec(), std::move(imgs), 1.0);
  };

  for (int i = 0; i < m2; ++i) {
    const Word& r = p.relators()[static_cast<std::size_t>(i)];
    const CMatrix base_inv = inverse(evaluate_word(r, rep));
    for (int j = 0; j < m1; ++j)
      for (int k = 0; k < d; ++k) {
        const CMatrix fp = evaluate_word(r, shifted(j, k, step));
        const CMatrix fm = evaluate_word(r, shifted(j, k, -step));
        const CMatrix deriv = (fp - fm) / (2.0 * step) * base_inv;
        jac.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d + k, d, 1) = sl_coords(deriv);
      }
  }
  return jac;
}

/// Random presentation with 1..3 generators and 1..2 nonempty freely reduced
/// relators of length <= max_len.
inline GroupPresentation random_presentation(std::mt19937_64& rng, int max_len = 12) {
  std::uniform_int_distribution<int> gens_dist(1, 3), rels_dist(1, 2), len_dist(1, max_len), sign_dist(0, 1);
  const int m1 = gens_dist(rng);
  const int m2 = rels_dist(rng);
  std::vector<std::string> names;
  for (int g = 0; g < m1; ++g) names.emplace_back(1, static_cast<char>('a' + g));
  std::uniform_int_distribution<int> gen_dist(0, m1 - 1);
  std::vector<Word> relators;
  while (static_cast<int>(relators.size()) < m2) {
    Word w;
    const int len = len_dist(rng);
    while (static_cast<int>(w.size()) < len) {
      const Letter l{gen_dist(rng), sign_dist(rng) ? 1 : -1};
      if (!w.empty() && cancels(w.back(), l)) continue;
      w.push_back(l);
    }
    relators.push_back(std::move(w));
  }
  return GroupPresentation(std::move(names), std::move(relators));
}

struct FoxSelftestResult {
  int pairs = 0;
  double max_deviation = 0.0;
  int worst_pair = -1;
};

/// Random SL(n) element with moderate condition number: a special unitary matrix
/// times a perturbation of the identity. Keeps difference quotients of long words
/// away from cancellation error.
inline CMatrix random_well_conditioned_sl(int n, std::mt19937_64& rng) {
  const CMatrix u = random_special_unitary(n, rng);
  return normalize_det(u * random_sl_near_identity(n, rng, 0.2));
}

/// Compares analytic and finite-difference Jacobians on random (presentation,
/// representation) pairs with n in {2,3}.
inline FoxSelftestResult fox_selftest(int pairs, std::uint64_t seed, double step = kFiniteDifferenceStep) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_dist(2, 3);
  FoxSelftestResult out;
  for (int k = 0; k < pairs; ++k) {
    const GroupPresentation p = random_presentation(rng);
    const GroupSpec spec = GroupSpec::sl(n_dist(rng));
    std::vector<CMatrix> imgs;
    for (int g = 0; g < p.num_generators(); ++g) imgs.push_back(random_well_conditioned_sl(spec.n(), rng));
    const Representation rep(spec, std::move(imgs));
    const double dev = (relator_jacobian(p, rep) - finite_difference_jacobian(p, rep, step)).cwiseAbs().maxCoeff();
    ++out.pairs;
    if (dev > out.max_deviation || out.worst_pair < 0) {
      out.max_deviation = std::max(out.max_deviation, dev);
      out.worst_pair = k;
    }
  }
  return out;
}

}  // namespace charvar
