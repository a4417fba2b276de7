// charvar: certify character-variety dimension bounds at concrete representations.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "charvar/charvar.hpp"

namespace {

struct GlobalOptions {
  std::optional<double> tol_rank;
  std::optional<double> tol_residual;
  bool json = false;
};

void apply_overrides(charvar::InputDocument& doc, const GlobalOptions& g) {
  if (g.tol_rank) doc.tol.rank = *g.tol_rank;
  if (g.tol_residual) doc.tol.residual = *g.tol_residual;
}

int run_bound(int n, int t, int chi, const GlobalOptions& g) {
  const auto spec = charvar::GroupSpec::sl(n);
  const charvar::ManifoldData m{t, chi};
  const auto b = charvar::bound_report(m, spec);
  charvar::Json j = charvar::to_json(b);
  j["sl_n_bound"] = charvar::sl_n_bound(m, n);
  j["surface_restriction_codim"] = charvar::surface_restriction_codim(spec);
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "SL(" << n << "): d=" << spec.d() << " r=" << spec.r() << " z=" << spec.z() << "\n"
              << "bound r*t - d*chi + z = " << b.general_bound << "  (t=" << t << ", chi=" << chi << ")\n";
  }
  return 0;
}

int run_certify(const std::string& path, const GlobalOptions& g) {
  auto doc = charvar::load_input(path);
  apply_overrides(doc, g);
  const auto rpt = charvar::certify(doc);
  if (g.json) {
    std::cout << charvar::to_json(rpt, doc.presentation).dump(2) << "\n";
  } else {
    std::cout << charvar::summary(rpt, doc.presentation);
  }
  return charvar::exit_code(rpt.verdict);
}

int run_survey(const std::string& path, int samples, std::uint64_t seed, const GlobalOptions& g) {
  auto doc = charvar::load_input(path);
  apply_overrides(doc, g);
  const auto s = charvar::survey(doc, samples, seed);
  if (g.json) {
    std::cout << charvar::to_json(s, doc.presentation).dump(2) << "\n";
  } else {
    std::cout << samples << " samples, " << s.failures << " failed\n";
    for (const auto& [dim, count] : s.estimate_counts) std::cout << "dim_X0_estimate " << dim << ": " << count << "\n";
    for (const auto& smp : s.samples)
      if (!smp.report) std::cout << "sample " << smp.index << " failed: " << smp.error << "\n";
  }
  if (s.failures > 0) return 1;
  return s.estimate_counts.size() <= 1 ? 0 : 3;
}

int run_goldman(int genus, int n, std::uint64_t seed, const GlobalOptions& g) {
  const auto rpt = charvar::goldman_check(genus, charvar::GroupSpec::sl(n), seed,
                                          g.tol_rank.value_or(charvar::kDefaultRankTol));
  if (g.json) {
    std::cout << charvar::to_json(rpt).dump(2) << "\n";
  } else {
    std::cout << "genus " << genus << ", SL(" << n << "): dim Z1 = " << rpt.dim_Z1 << ", expected (2g-1)d + z = "
              << rpt.expected << ", margin " << rpt.margin << ", seed " << rpt.seed_used << " -> "
              << (rpt.ok ? "OK" : "MISMATCH") << "\n";
  }
  return rpt.ok ? 0 : 3;
}

int run_fox_selftest(int pairs, std::uint64_t seed, const GlobalOptions& g) {
  const auto r = charvar::fox_selftest(pairs, seed);
  const bool ok = r.max_deviation < 1e-6;
  if (g.json) {
    std::cout << charvar::Json{{"pairs", r.pairs}, {"max_deviation", r.max_deviation},
                               {"worst_pair", r.worst_pair}, {"step", charvar::kFiniteDifferenceStep}, {"ok", ok}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << r.pairs << " random pairs, max |Fox - finite difference| = " << r.max_deviation << " -> "
              << (ok ? "OK" : "FAIL") << "\n";
  }
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify dimension lower bounds for SL(n,C) character varieties of 3-manifold groups"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--tol-rank", g.tol_rank, "Relative singular-value threshold for rank decisions")->check(CLI::PositiveNumber);
  app.add_option("--tol-residual", g.tol_residual, "Newton relator residual target")->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "Machine-readable JSON output only");

  int n = 2, t = 0, chi = 0;
  auto* bound = app.add_subcommand("bound", "Evaluate r*t - d*chi + z for SL(n)");
  bound->add_option("--n", n, "SL(n)")->required()->check(CLI::Range(2, 1000));
  bound->add_option("--t", t, "Number of torus boundary components")->required()->check(CLI::NonNegativeNumber);
  bound->add_option("--chi", chi, "Euler characteristic")->required();

  std::string path;
  auto* certify = app.add_subcommand("certify", "Certify one representation from a JSON document");
  certify->add_option("file", path, "Input document")->required();

  int samples = 20;
  std::uint64_t seed = 0;
  auto* survey = app.add_subcommand("survey", "Certify random perturbations of a base representation");
  survey->add_option("file", path, "Input document")->required();
  survey->add_option("--samples", samples, "Number of perturbed samples")->check(CLI::NonNegativeNumber);
  survey->add_option("--seed", seed, "Random seed");

  int genus = 2;
  auto* goldman = app.add_subcommand("goldman-check", "Check the surface group tangent dimension");
  goldman->add_option("--genus", genus, "Surface genus")->check(CLI::Range(2, 13));
  goldman->add_option("--n", n, "SL(n)")->check(CLI::Range(2, 10));
  goldman->add_option("--seed", seed, "Random seed");

  int pairs = 50;
  auto* fox = app.add_subcommand("fox-selftest", "Compare Fox Jacobians with finite differences");
  fox->add_option("--pairs", pairs, "Number of random presentation/representation pairs")->check(CLI::PositiveNumber);
  fox->add_option("--seed", seed, "Random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bound) return run_bound(n, t, chi, g);
    if (*certify) return run_certify(path, g);
    if (*survey) return run_survey(path, samples, seed, g);
    if (*goldman) return run_goldman(genus, n, seed, g);
    if (*fox) return run_fox_selftest(pairs, seed, g);
  } catch (const charvar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
