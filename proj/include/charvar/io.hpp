#pragma once
//
// JSON input documents and report serialization.
//
// Input schema:
//   group          {"family": "SL", "n": int}
//   presentation   {"generators": [string], "relators": [word]}
//   peripheral     [{"kind": "torus" | "higher-genus", "words": [word, ...]}]   (optional)
//   euler_characteristic  int                                                  (optional)
//   representation {generator: n x n array of [re, im] pairs or real numbers}
//   tolerances     {"rank": real, "residual": real}                            (optional)
//   seed           int                                                         (optional)
//

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "charvar/certify.hpp"

namespace charvar {

using Json = nlohmann::json;

namespace detail {

inline const Json& require(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    throw Error(std::string("input: missing field \"") + key + "\" in " + where);
  return j.at(key);
}

inline Complex parse_complex(const Json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw Error("input: matrix entries must be numbers or [re, im] pairs");
}

inline CMatrix parse_matrix(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw Error("input: matrix must have " + std::to_string(n) + " rows");
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw Error("input: matrix row must have " + std::to_string(n) + " entries");
    for (int k = 0; k < n; ++k) m(i, k) = parse_complex(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

inline Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace detail

inline Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline InputDocument parse_input(const Json& j) {
  if (!j.is_object()) throw Error("input: top level must be an object");

  const Json& group = detail::require(j, "group", "document");
  const std::string family = detail::require(group, "family", "group").get<std::string>();
  if (family != "SL") throw Error("input: only the SL family is supported, got \"" + family + "\"");
  const GroupSpec spec = GroupSpec::sl(detail::require(group, "n", "group").get<int>());

  const Json& pres = detail::require(j, "presentation", "document");
  auto names = detail::require(pres, "generators", "presentation").get<std::vector<std::string>>();
  std::vector<Word> relators;
  if (pres.contains("relators"))
    for (const Json& r : pres.at("relators")) relators.push_back(parse_word(r.get<std::string>(), names));

  std::vector<PeripheralSpec> peripheral;
  if (j.contains("peripheral")) {
    for (const Json& ps : j.at("peripheral")) {
      PeripheralSpec spec_p;
      const std::string kind = detail::require(ps, "kind", "peripheral entry").get<std::string>();
      if (kind == "torus")
        spec_p.kind = PeripheralKind::torus;
      else if (kind == "higher-genus" || kind == "higher_genus")
        spec_p.kind = PeripheralKind::higher_genus;
      else
        throw Error("input: unknown peripheral kind \"" + kind + "\"");
      for (const Json& w : detail::require(ps, "words", "peripheral entry"))
        spec_p.words.push_back(parse_word(w.get<std::string>(), names));
      peripheral.push_back(std::move(spec_p));
    }
  }
  GroupPresentation presentation(names, std::move(relators), std::move(peripheral));

  const Json& rep = detail::require(j, "representation", "document");
  std::vector<CMatrix> images;
  for (const std::string& g : names) {
    if (!rep.contains(g)) throw Error("input: representation has no image for generator \"" + g + "\"");
    images.push_back(detail::parse_matrix(rep.at(g), spec.n()));
  }
  if (rep.size() != names.size()) throw Error("input: representation names a generator that is not declared");

  InputDocument doc{.spec = spec, .presentation = std::move(presentation), .images = std::move(images)};
  if (j.contains("euler_characteristic")) doc.euler_characteristic = j.at("euler_characteristic").get<int>();
  if (j.contains("tolerances")) {
    const Json& t = j.at("tolerances");
    if (t.contains("rank")) doc.tol.rank = t.at("rank").get<double>();
    if (t.contains("residual")) doc.tol.residual = t.at("residual").get<double>();
    if (doc.tol.rank < 0 || doc.tol.residual <= 0) throw Error("input: tolerances must be positive");
  }
  if (j.contains("seed")) doc.seed = j.at("seed").get<std::uint64_t>();
  return doc;
}

inline InputDocument parse_input_text(const std::string& text) {
  try {
    return parse_input(Json::parse(text));
  } catch (const Json::exception& e) {
    throw Error(std::string("input: ") + e.what());
  }
}

inline InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("input: cannot open \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str());
}

inline Json to_json(const StructureReport& s, const GroupPresentation& p) {
  Json companions = Json::array();
  for (const auto& w : s.companion_words) companions.push_back(w ? Json(p.render(*w)) : Json(nullptr));
  return {{"centralizer_dim_full_image", s.centralizer_dim_full_image},
          {"peripheral_centralizer_dims", s.peripheral_centralizer_dims},
          {"irreducible", s.irreducible},
          {"boundary_regular", s.boundary_regular},
          {"companion_words", companions},
          {"irreducibility_checked", s.irreducibility_checked}};
}

inline Json to_json(const TangentReport& t) {
  return {{"jacobian_rank", t.jacobian_rank},
          {"dim_Z1", t.dim_Z1},
          {"dim_B1", t.dim_B1},
          {"dim_H1", t.dim_H1},
          {"deficiency_floor", t.deficiency_floor},
          {"singular_values_margin", detail::finite_or_null(t.singular_values_margin)},
          {"reliable", t.reliable}};
}

inline Json to_json(const BoundReport& b) {
  return {{"general_bound", b.general_bound}, {"formula_used", b.formula_used},
          {"t", b.t}, {"chi", b.chi}, {"d", b.d}, {"r", b.r}, {"z", b.z}};
}

inline Json to_json(const CertReport& r, const GroupPresentation& p) {
  Json rep = Json::object();
  for (int g = 0; g < r.refined.size(); ++g)
    rep[p.generator_names()[static_cast<std::size_t>(g)]] = matrix_to_json(r.refined.image(g));
  return {{"residual", r.residual},
          {"newton_iterations", r.newton_iterations},
          {"structure", to_json(r.structure, p)},
          {"tangent", to_json(r.tangent)},
          {"manifold", {{"torus_count", r.manifold.torus_count}, {"euler_characteristic", r.manifold.euler_characteristic}}},
          {"bound", to_json(r.bound)},
          {"dim_X0_estimate", r.dim_X0_estimate},
          {"dim_X0_certified", r.dim_X0_certified},
          {"verdict", to_string(r.verdict)},
          {"warnings", r.warnings},
          {"representation", rep}};
}

inline Json to_json(const SurveyReport& s, const GroupPresentation& p) {
  Json samples = Json::array();
  for (const SurveySample& smp : s.samples) {
    Json j = {{"index", smp.index}};
    if (smp.report)
      j["report"] = to_json(*smp.report, p);
    else
      j["error"] = smp.error;
    samples.push_back(std::move(j));
  }
  Json counts = Json::object();
  for (const auto& [dim, count] : s.estimate_counts) counts[std::to_string(dim)] = count;
  return {{"samples", samples}, {"estimate_counts", counts}, {"failures", s.failures}};
}

inline Json to_json(const GoldmanReport& g) {
  return {{"genus", g.genus}, {"n", g.n}, {"seed_used", g.seed_used}, {"attempts", g.attempts},
          {"residual", g.residual}, {"irreducible", g.irreducible}, {"dim_Z1", g.dim_Z1},
          {"expected", g.expected}, {"margin", detail::finite_or_null(g.margin)}, {"ok", g.ok}};
}

inline std::string summary(const CertReport& r, const GroupPresentation& p) {
  std::ostringstream os;
  os << "verdict            " << to_string(r.verdict) << "\n"
     << "residual           " << r.residual << " (" << r.newton_iterations << " Newton iterations)\n"
     << "irreducible        " << (r.structure.irreducible ? "yes" : "no") << "\n"
     << "boundary regular   " << (r.structure.boundary_regular ? "yes" : "no");
  if (!r.structure.peripheral_centralizer_dims.empty()) {
    os << " (peripheral centralizer dims";
    for (int d : r.structure.peripheral_centralizer_dims) os << ' ' << d;
    os << ')';
  }
  os << "\n";
  for (std::size_t t = 0; t < r.structure.companion_words.size(); ++t) {
    const auto& w = r.structure.companion_words[t];
    os << "companion (torus " << t << ") " << (w ? p.render(*w) : std::string("none found")) << "\n";
  }
  os << "dim Z1 / B1 / H1    " << r.tangent.dim_Z1 << " / " << r.tangent.dim_B1 << " / " << r.tangent.dim_H1 << "\n"
     << "rank margin        " << r.tangent.singular_values_margin << "\n"
     << "dim X0 estimate    " << r.dim_X0_estimate << (r.dim_X0_certified ? "" : " (not certified)") << "\n"
     << "bound              " << r.bound.general_bound << "  [" << r.bound.formula_used << ", t=" << r.bound.t
     << " chi=" << r.bound.chi << " d=" << r.bound.d << " r=" << r.bound.r << " z=" << r.bound.z << "]\n";
  for (const std::string& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace charvar
