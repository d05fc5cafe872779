#pragma once

#include <json.hpp>

#include "jacrees/analysis.hpp"

namespace jacrees {

inline constexpr const char* kToolName = "jacrees";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// Problem description as ingested by the CLI; see docs/report_schema.json
/// for the emitted document.
struct ProblemSpec {
  std::string name = "unnamed";
  std::vector<std::string> vars;
  FieldSpec field;
  std::string f_text;
  int dmax = 0;  // 0 → engine default max(8, rt+3)
  int max_r = 50;
  int t_rows = 0;
  Semantics semantics = Semantics::local;
  std::vector<std::string> checks;  // empty → everything
  bool slow = false;
  std::map<std::string, std::string> metadata;  // meta_* keys, carried verbatim
  std::map<std::string, std::string> expects;   // expect_* keys (corpus entries)

  bool check_enabled(const std::string& name) const {
    if (checks.empty()) return true;
    for (const auto& c : checks)
      if (c == name) return true;
    return false;
  }

  AnalysisOptions options() const {
    AnalysisOptions o;
    o.dmax = dmax;
    o.max_r = max_r;
    o.t_rows = t_rows;
    o.semantics = semantics;
    o.with_t_table = check_enabled("t_table");
    o.with_rees = check_enabled("rt") || check_enabled("classify");
    o.with_top_equation = check_enabled("top_equation");
    o.with_cross_validate = check_enabled("cross_validate");
    return o;
  }
};

inline Json to_json(const CheckResult& c) {
  return Json{{"name", c.name},
              {"applicable", c.applicable},
              {"passed", c.passed},
              {"detail", c.detail}};
}

inline Json to_json(const TTableReport& t) {
  Json rows = Json::array();
  for (int i = 1; i <= t.rows; ++i) {
    Json zero = Json::array(), nonzero = Json::array(), unknown = Json::array();
    for (int d = 1; d <= t.dmax; ++d) {
      int v = t.at(i, d);
      (v == 1 ? zero : v == 0 ? nonzero : unknown).push_back(d);
    }
    rows.push_back(Json{{"i", i}, {"zero", zero}, {"nonzero", nonzero}, {"unknown", unknown}});
  }
  return Json{{"rows", t.rows}, {"dmax", t.dmax}, {"entries", rows}};
}

inline Json evidence_to_json(const std::vector<DegreeEvidence>& ev) {
  Json a = Json::array();
  for (const auto& e : ev)
    a.push_back(Json{{"degree", e.degree},
                     {"basis_elements", e.total},
                     {"surviving", e.surviving.size()},
                     {"surviving_indices", e.surviving}});
  return a;
}

inline Json degrees_to_json(const std::map<int, int>& h) {
  Json o = Json::object();
  for (const auto& [d, c] : h) o[std::to_string(d)] = c;
  return o;
}

inline Json report_document(const ProblemSpec& spec, const AnalysisReport& rep,
                            bool with_timings) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  Json meta = Json::object();
  for (const auto& [k, v] : spec.metadata) meta[k] = v;
  doc["problem"] = Json{
      {"name", spec.name},         {"vars", spec.vars},
      {"field", spec.field.to_string()},
      {"f", spec.f_text},          {"dmax", rep.dmax},
      {"max_r", rep.max_r},        {"semantics", rep.semantics},
      {"metadata", meta}};
  doc["field_label"] =
      spec.field.kind == FieldKind::rationals ? "exact" : "characteristic-p evidence";
  doc["smooth"] = rep.smooth;
  doc["invariants"] = Json{{"r", rep.r},
                           {"id", rep.id},
                           {"rn", rep.rn},
                           {"rt_jacobian", rep.rt_jacobian},
                           {"rt_gradient", rep.rt_gradient}};
  doc["verdict"] = verdict_name(rep.verdict);
  doc["euler_homogeneous"] = rep.euler_homogeneous;
  doc["regular_sequence"] = rep.regular_sequence;
  doc["t_table"] = to_json(rep.t_table);
  doc["t_disclaimer"] = rep.t_disclaimer;
  doc["rees"] = Json{{"jacobian", Json{{"relation_type", rep.rt_jacobian},
                                       {"basis_degrees", degrees_to_json(rep.q_degrees_jacobian)},
                                       {"evidence", evidence_to_json(rep.evidence_jacobian)}}},
                     {"gradient", Json{{"relation_type", rep.rt_gradient},
                                       {"basis_degrees", degrees_to_json(rep.q_degrees_gradient)},
                                       {"evidence", evidence_to_json(rep.evidence_gradient)}}}};
  doc["top_equation"] = rep.has_top_equation
                            ? Json{{"degree", rep.top_degree},
                                   {"monic", rep.top_monic},
                                   {"unit", rep.top_unit_text},
                                   {"text", rep.top_equation_text}}
                            : Json();
  Json witnesses = Json::object();
  for (const auto& [k, v] : rep.witnesses) witnesses[k] = v;
  doc["witnesses"] = witnesses;
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back(to_json(c));
  doc["checks"] = checks;
  doc["diagnostics"] = rep.diagnostics;
  if (with_timings) {
    Json t = Json::object();
    for (const auto& [stage, us] : rep.timings_us) t[stage] = us;
    doc["timings_us"] = t;
  }
  return doc;
}

}  // namespace jacrees
