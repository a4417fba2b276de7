#pragma once
//
// Target group metadata and representations rho : Gamma -> SL(n,C) given by the
// images of the generators.
//

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "charvar/cxla.hpp"
#include "charvar/words.hpp"

namespace charvar {

/// Numerical invariants of the target group: dimension d, semisimple rank r and
/// center dimension z. Only SL(n) is constructible.
class GroupSpec {
 public:
  static GroupSpec sl(int n) {
    if (n < 2) throw Error("GroupSpec: SL(n) requires n >= 2");
    return GroupSpec(n);
  }

  std::string family() const { return "SL"; }
  int n() const { return n_; }
  int d() const { return n_ * n_ - 1; }
  int r() const { return n_ - 1; }
  int z() const { return 0; }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  explicit GroupSpec(int n) : n_(n) {}
  int n_;
};

inline constexpr double kDefaultDetTol = 1e-6;

/// Generator images of a representation. Every image is n x n, finite, with
/// |det - 1| <= det_tol.
class Representation {
 public:
  Representation(GroupSpec spec, std::vector<CMatrix> images, double det_tol = kDefaultDetTol)
      : spec_(spec), images_(std::move(images)) {
    const int n = spec_.n();
    for (std::size_t i = 0; i < images_.size(); ++i) {
      const CMatrix& m = images_[i];
      if (m.rows() != n || m.cols() != n)
        throw Error("Representation: image " + std::to_string(i) + " is not " + std::to_string(n) +
                    "x" + std::to_string(n));
      if (!all_finite(m)) throw Error("Representation: image " + std::to_string(i) + " is not finite");
      if (std::abs(m.determinant() - 1.0) > det_tol)
        throw Error("Representation: image " + std::to_string(i) + " does not have determinant 1");
    }
  }

  const GroupSpec& spec() const { return spec_; }
  const std::vector<CMatrix>& images() const { return images_; }
  const CMatrix& image(int gen) const { return images_.at(static_cast<std::size_t>(gen)); }
  int size() const { return static_cast<int>(images_.size()); }

  /// Simultaneous conjugation g rho g^-1.
  Representation conjugated(const CMatrix& g) const {
    const CMatrix gi = inverse(g);
    std::vector<CMatrix> out;
    out.reserve(images_.size());
    for (const CMatrix& m : images_) out.push_back(g * m * gi);
    return Representation(spec_, std::move(out));
  }

 private:
  GroupSpec spec_;
  std::vector<CMatrix> images_;
};

/// Scales m by the principal n-th root of its determinant so the result lies in SL(n).
inline CMatrix normalize_det(const CMatrix& m) {
  const Complex det = m.determinant();
  if (std::abs(det) == 0.0) throw Error("normalize_det: singular matrix");
  return m / std::pow(det, 1.0 / static_cast<double>(m.rows()));
}

/// rho(w). The empty word maps to the identity.
inline CMatrix evaluate_word(const Word& w, const Representation& rep) {
  const int n = rep.spec().n();
  CMatrix out = CMatrix::Identity(n, n);
  std::vector<CMatrix> inv_cache(static_cast<std::size_t>(rep.size()));
  for (const Letter& l : w) {
    if (l.gen < 0 || l.gen >= rep.size()) throw Error("evaluate_word: generator has no image");
    if (l.sign > 0) {
      out = out * rep.image(l.gen);
    } else {
      CMatrix& inv = inv_cache[static_cast<std::size_t>(l.gen)];
      if (inv.size() == 0) inv = inverse(rep.image(l.gen));
      out = out * inv;
    }
  }
  return out;
}

/// max_i ||rho(r_i) - I||_F; zero when there are no relators.
inline double relator_residual(const GroupPresentation& p, const Representation& rep) {
  const int n = rep.spec().n();
  double worst = 0.0;
  for (const Word& r : p.relators())
    worst = std::max(worst, (evaluate_word(r, rep) - CMatrix::Identity(n, n)).norm());
  return worst;
}

/// Irreducible n-dimensional representation of SL(2): the action of m on
/// homogeneous polynomials of degree n-1 in the monomial basis
/// x^{n-1}, x^{n-2} y, ..., y^{n-1}, where m x = m00 x + m10 y and m y = m01 x + m11 y.
inline CMatrix sym_power_embedding(const CMatrix& m, int n, double det_tol = kDefaultDetTol) {
  if (n < 2) throw Error("sym_power_embedding: n must be at least 2");
  if (m.rows() != 2 || m.cols() != 2) throw Error("sym_power_embedding: input must be 2x2");
  if (std::abs(m.determinant() - 1.0) > det_tol)
    throw Error("sym_power_embedding: input does not have determinant 1");
  const int k = n - 1;
  CMatrix out = CMatrix::Zero(n, n);
  // Column i is the coefficient vector of (m00 + m10 t)^{k-i} (m01 + m11 t)^i in t.
  for (int i = 0; i <= k; ++i) {
    std::vector<Complex> poly{1.0};
    auto multiply_linear = [&poly](Complex c0, Complex c1) {
      std::vector<Complex> next(poly.size() + 1, 0.0);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j] += poly[j] * c0;
        next[j + 1] += poly[j] * c1;
      }
      poly = std::move(next);
    };
    for (int e = 0; e < k - i; ++e) multiply_linear(m(0, 0), m(1, 0));
    for (int e = 0; e < i; ++e) multiply_linear(m(0, 1), m(1, 1));
    for (int j = 0; j <= k; ++j) out(j, i) = poly[static_cast<std::size_t>(j)];
  }
  return out;
}

/// Matrix with independent standard complex Gaussian entries (variance 1/2 per part).
inline CMatrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale / std::sqrt(2.0));
  CMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  return m;
}

/// Gaussian matrix pushed into SL(n) by det normalization.
inline CMatrix random_sl(int n, std::mt19937_64& rng) { return normalize_det(gaussian_matrix(n, n, rng)); }

/// Element of SL(n) within a bounded distance of the identity: I + scale*G, normalized.
inline CMatrix random_sl_near_identity(int n, std::mt19937_64& rng, double scale = 0.3) {
  return normalize_det(CMatrix::Identity(n, n) + gaussian_matrix(n, n, rng, scale));
}

/// Unitary matrix from the QR factorization of a Gaussian matrix, scaled into SU(n).
inline CMatrix random_special_unitary(int n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<CMatrix> qr(gaussian_matrix(n, n, rng));
  return normalize_det(qr.householderQ() * CMatrix::Identity(n, n));
}

/// One pseudorandom SL(n) matrix per generator, deterministic in seed.
inline Representation random_representation(const GroupPresentation& p, const GroupSpec& spec,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CMatrix> images;
  for (int i = 0; i < p.num_generators(); ++i) images.push_back(random_sl(spec.n(), rng));
  return Representation(spec, std::move(images));
}

}  // namespace charvar
