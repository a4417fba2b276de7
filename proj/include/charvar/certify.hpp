#pragma once
//
// Certification pipeline: refine a representation onto Hom(Gamma, SL(n)), check
// irreducibility and boundary regularity, measure the local dimension of the
// character variety and compare it with r*t - d*chi + z.
//

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "charvar/bounds.hpp"
#include "charvar/cxla.hpp"
#include "charvar/grouprep.hpp"
#include "charvar/structure.hpp"
#include "charvar/tangent.hpp"
#include "charvar/words.hpp"

namespace charvar {

struct Tolerances {
  double rank = kDefaultRankTol;
  double residual = 1e-12;
};

/// Everything needed to certify one (presentation, representation) pair.
struct InputDocument {
  GroupSpec spec;
  GroupPresentation presentation;
  std::vector<CMatrix> images;
  std::optional<int> euler_characteristic;
  Tolerances tol;
  std::uint64_t seed = 0;
};

enum class Verdict { bound_met, bound_violation_suspect_input, hypotheses_not_met, unreliable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::bound_met: return "BOUND_MET";
    case Verdict::bound_violation_suspect_input: return "BOUND_VIOLATION_SUSPECT_INPUT";
    case Verdict::hypotheses_not_met: return "HYPOTHESES_NOT_MET";
    case Verdict::unreliable: return "UNRELIABLE";
  }
  return "UNKNOWN";
}

/// Process exit code for a verdict.
inline int exit_code(Verdict v) {
  switch (v) {
    case Verdict::bound_met: return 0;
    case Verdict::hypotheses_not_met: return 2;
    case Verdict::unreliable: return 3;
    case Verdict::bound_violation_suspect_input: return 4;
  }
  return 1;
}

struct CertReport {
  double residual = 0.0;
  int newton_iterations = 0;
  StructureReport structure;
  TangentReport tangent;
  ManifoldData manifold;
  BoundReport bound;
  int dim_X0_estimate = 0;
  /// True only at irreducible points, where the estimate is dim H^1 + z.
  /// Elsewhere the estimate is the lower bound dim Z^1 - d + z.
  bool dim_X0_certified = false;
  Verdict verdict = Verdict::unreliable;
  std::vector<std::string> warnings;
  Representation refined;
};

/// chi from the explicit override if present, else from the deficiency formula.
inline int resolve_euler_characteristic(const InputDocument& doc, std::vector<std::string>* warnings = nullptr) {
  const int from_presentation = euler_characteristic(doc.presentation);
  if (!doc.euler_characteristic) return from_presentation;
  if (*doc.euler_characteristic != from_presentation && warnings)
    warnings->push_back("euler_characteristic override " + std::to_string(*doc.euler_characteristic) +
                        " differs from 1 - m1 + m2 = " + std::to_string(from_presentation) +
                        "; using the override");
  return *doc.euler_characteristic;
}

inline Verdict decide_verdict(const CertReport& r) {
  if (!(r.residual < kCertifiedResidual) || !r.tangent.reliable) return Verdict::unreliable;
  if (!r.structure.irreducible || !r.structure.boundary_regular) return Verdict::hypotheses_not_met;
  if (r.dim_X0_estimate >= r.bound.general_bound) return Verdict::bound_met;
  return Verdict::bound_violation_suspect_input;
}

/// Runs the whole pipeline on a refined copy of the document's representation.
inline CertReport certify_representation(const InputDocument& doc, const Representation& start,
                                         double entry_guard = NewtonOptions{}.entry_guard) {
  const GroupPresentation& p = doc.presentation;
  const GroupSpec& spec = doc.spec;
  if (start.size() != p.num_generators())
    throw Error("certify: representation has " + std::to_string(start.size()) + " images but the presentation has " +
                std::to_string(p.num_generators()) + " generators");

  NewtonOptions nopt;
  nopt.tol_residual = doc.tol.residual;
  nopt.rank_tol = doc.tol.rank;
  nopt.entry_guard = entry_guard;
  NewtonResult nr = newton_refine(p, start, nopt);

  CertReport rpt{.refined = std::move(nr.rep)};
  rpt.newton_iterations = nr.iterations;
  rpt.residual = relator_residual(p, rpt.refined);
  rpt.structure = structure_report(p, rpt.refined, doc.tol.rank);
  rpt.tangent = tangent_report(p, rpt.refined, doc.tol.rank);
  rpt.manifold.torus_count = p.torus_count();
  rpt.manifold.euler_characteristic = resolve_euler_characteristic(doc, &rpt.warnings);
  rpt.bound = bound_report(rpt.manifold, spec);

  rpt.dim_X0_certified = rpt.structure.irreducible;
  rpt.dim_X0_estimate = rpt.structure.irreducible ? rpt.tangent.dim_H1 + spec.z()
                                                  : hom_to_char_drop(std::max(rpt.tangent.dim_Z1, 0), spec);
  rpt.verdict = decide_verdict(rpt);
  if (!rpt.dim_X0_certified)
    rpt.warnings.push_back("representation is reducible; dim_X0_estimate is the lower bound dim Z1 - d + z, not certified");
  return rpt;
}

inline CertReport certify(const InputDocument& doc) {
  return certify_representation(doc, Representation(doc.spec, doc.images));
}

// ---------------------------------------------------------------------------
// Survey
// ---------------------------------------------------------------------------

inline constexpr double kSurveyNoise = 1e-3;
// Noise of size 1e-3 on every entry moves long relators by more than the default
// 1e-2 guard, so survey samples enter Newton with a wider guard.
inline constexpr double kSurveyEntryGuard = 0.5;

struct SurveySample {
  int index = 0;
  std::optional<CertReport> report;
  std::string error;
};

struct SurveyReport {
  std::vector<SurveySample> samples;
  /// dim_X0_estimate -> number of samples with that value.
  std::map<int, int> estimate_counts;
  int failures = 0;
};

/// Perturbs the base representation num_samples times, refines and certifies each.
inline SurveyReport survey(const InputDocument& doc, int num_samples, std::uint64_t seed) {
  if (num_samples < 0) throw Error("survey: sample count must be nonnegative");
  std::mt19937_64 rng(seed);
  const int n = doc.spec.n();
  SurveyReport out;
  for (int s = 0; s < num_samples; ++s) {
    SurveySample sample{.index = s};
    std::vector<CMatrix> imgs;
    for (const CMatrix& m : doc.images) imgs.push_back(m + gaussian_matrix(n, n, rng, kSurveyNoise));
    try {
      for (CMatrix& m : imgs) m = normalize_det(m);
      sample.report = certify_representation(doc, Representation(doc.spec, imgs), kSurveyEntryGuard);
      ++out.estimate_counts[sample.report->dim_X0_estimate];
    } catch (const Error& e) {
      sample.error = e.what();
      ++out.failures;
    }
    out.samples.push_back(std::move(sample));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Surface groups
// ---------------------------------------------------------------------------

struct GoldmanReport {
  int genus = 0;
  int n = 0;
  std::uint64_t seed_used = 0;
  int attempts = 0;
  double residual = 0.0;
  bool irreducible = false;
  int dim_Z1 = 0;
  int expected = 0;
  double margin = 0.0;
  bool ok = false;
};

/// Representation of the genus-g surface group with trivially satisfied relator:
/// handles come in pairs (x,y),(y,x) with [x,y][y,x] = 1, and an odd leftover
/// handle maps to (w,w).
inline std::vector<CMatrix> surface_swap_images(int genus, int n, std::mt19937_64& rng) {
  std::vector<CMatrix> imgs;
  int h = 0;
  for (; h + 1 < genus; h += 2) {
    const CMatrix x = random_sl(n, rng), y = random_sl(n, rng);
    imgs.insert(imgs.end(), {x, y, y, x});
  }
  if (h < genus) {
    const CMatrix w = random_sl(n, rng);
    imgs.insert(imgs.end(), {w, w});
  }
  return imgs;
}

/// Checks the tangent dimension (2g-1)d + z at an irreducible surface group representation.
inline GoldmanReport goldman_check(int genus, const GroupSpec& spec, std::uint64_t seed,
                                   double tol = kDefaultRankTol) {
  if (genus < 2) throw Error("goldman_check: genus must be at least 2");
  const GroupPresentation p = surface_presentation(genus);
  GoldmanReport g{.genus = genus, .n = spec.n(), .expected = goldman_dim(genus, spec)};
  constexpr int kMaxAttempts = 5;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    std::mt19937_64 rng(s);
    const Representation rep(spec, surface_swap_images(genus, spec.n(), rng));
    g.attempts = attempt + 1;
    g.seed_used = s;
    if (!is_irreducible_burnside(rep.images(), spec, tol)) continue;
    g.irreducible = true;
    g.residual = relator_residual(p, rep);
    const TangentReport t = tangent_report(p, rep, tol);
    g.dim_Z1 = t.dim_Z1;
    g.margin = t.singular_values_margin;
    g.ok = t.reliable && g.dim_Z1 == g.expected;
    return g;
  }
  throw Error("goldman_check: every constructed representation was reducible after " +
              std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace charvar
