#include "plab/report.hpp"

namespace plab {

Json to_json(const ProjectivePoint& p) { return p.str(); }

Json to_json(const SingularityRecord& s) {
  return {{"point", s.point.str()},
          {"multiplicity", s.multiplicity},
          {"kind", s.kind_name()},
          {"delta", s.delta},
          {"delta_is_lower_bound", s.kind == SingularityKind::Unclassified},
          {"milnor", s.milnor}};
}

Json to_json(const FlexResult& f) {
  Json pts = Json::array();
  for (const auto& p : f.points) pts.push_back(p.str());
  return {{"count_with_multiplicity", f.count_with_multiplicity},
          {"complete", f.complete},
          {"points", pts},
          {"points_complete", f.points_complete},
          {"notes", f.notes}};
}

Json to_json(const CurveAnalysis& a) {
  Json sings = Json::array();
  for (const auto& s : a.singularities) sings.push_back(to_json(s));
  Json j;
  j["curve"] = a.curve.equation().str();
  j["degree"] = a.curve.degree();
  j["singularities"] = sings;
  j["singular_locus_complete"] = a.locus.complete;
  j["nodes"] = a.nodes;
  j["cusps"] = a.cusps;
  j["flexes"] = a.flex ? to_json(*a.flex) : Json(nullptr);
  j["genus"] = a.genus.genus;
  j["reducibility_warning"] = a.genus.reducibility_warning;
  j["notes"] = a.notes;
  return j;
}

Json to_json(const DualCurveResult& d) {
  Json j;
  j["dual"] = d.curve.equation().str();
  j["degree"] = d.curve.degree();
  j["predicted_class"] = d.predicted_class ? Json(*d.predicted_class) : Json(nullptr);
  j["notes"] = d.notes;
  return j;
}

Json to_json(const PlueckerInvariants& p) {
  return {{"feasible", true}, {"d", p.d}, {"nu", p.nu}, {"kappa", p.kappa}, {"m", p.m},
          {"f", p.f},         {"b", p.b}, {"g", p.g}};
}

Json to_json(const NodeCuspSolution& s) {
  return {{"feasible", s.feasible},
          {"nu", s.nu.get_str()},
          {"kappa", s.kappa.get_str()},
          {"diagnostic", s.diagnostic},
          {"violated_identity", s.violated_identity}};
}

Json to_json(const Orbit& o) {
  Json pts = Json::array();
  for (const auto& p : o.points) pts.push_back(p.str());
  return {{"size", o.size()}, {"points", pts}};
}

Json to_json(const FixedLocus& f) {
  Json lines = Json::array(), pts = Json::array(), triples = Json::array();
  for (const auto& l : f.lines) lines.push_back({{"name", l.name}, {"equation", l.equation.str()}});
  for (const auto& [name, p] : f.points) pts.push_back({{"name", name}, {"point", p.str()}});
  for (const auto& p : f.triple_points) triples.push_back(p.str());
  return {{"lines", lines}, {"points", pts}, {"triple_points", triples}};
}

Json to_json(const RootSet& r) {
  Json roots = Json::array(), rest = Json::array();
  for (const auto& [v, k] : r.roots) roots.push_back({{"value", v.str()}, {"multiplicity", k}});
  for (const auto& [f, k] : r.unresolved) rest.push_back({{"factor", f.str()}, {"multiplicity", k}});
  return {{"roots", roots}, {"unresolved", rest}};
}

Json to_json(const OrbitObstruction& o) {
  Json vals = Json::array();
  for (const auto& v : o.values) vals.push_back(v.str());
  return {{"orbit", o.label},
          {"points", to_json(o.orbit)["points"]},
          {"values", vals},
          {"obstruction", o.obstruction.str()},
          {"identically_zero", o.identically_zero()},
          {"exceptional_lambda", to_json(o.exceptional)}};
}

Json to_json(const ChowReport& r) {
  return {{"d", r.d},
          {"pa_gamma", r.pa_gamma},
          {"deg_omega", r.deg_omega},
          {"pencil_count", r.pencil_count ? Json(*r.pencil_count) : Json(nullptr)},
          {"deg_B", r.deg_B},
          {"multiplicity_bound", r.multiplicity_bound}};
}

Json to_json(const ScenarioReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"criterion", c.criterion}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"scenario", r.id}, {"inputs", r.inputs},   {"invariants", r.invariants},
          {"checks", checks}, {"passed", r.passed()}, {"notes", r.notes}};
}

Json group_json(const std::vector<ProjectiveTransform>& group) {
  Json els = Json::array();
  for (const auto& g : group) els.push_back({{"matrix", g.str()}, {"order", element_order(g)}});
  return {{"order", group.size()}, {"elements", els}};
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void text(const Json& j, int indent, bool color, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto is_check = [](const Json& v) { return v.is_object() && v.contains("criterion") && v.contains("passed"); };
  auto check_line = [&](const Json& v) {
    bool ok = v["passed"].get<bool>();
    std::string tag = ok ? "PASS" : "FAIL";
    if (color) tag = (ok ? "\x1b[32m" : "\x1b[31m") + tag + "\x1b[0m";
    std::string s = "[" + tag + "] " + scalar(v["criterion"]) + " " + scalar(v["name"]);
    if (v.contains("detail") && !v["detail"].get<std::string>().empty()) s += ": " + scalar(v["detail"]);
    return s;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if ((v.is_object() || v.is_array()) && !v.empty()) {
        out += pad + k + ":\n";
        text(v, indent + 2, color, out);
      } else if (v.is_array()) {
        out += pad + k + ": []\n";
      } else {
        out += pad + k + ": " + scalar(v) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_check(v)) {
        out += pad + check_line(v) + "\n";
      } else if (v.is_object() || v.is_array()) {
        out += pad + "-\n";
        text(v, indent + 2, color, out);
      } else {
        out += pad + "- " + scalar(v) + "\n";
      }
    }
  } else {
    out += pad + scalar(j) + "\n";
  }
}

}  // namespace

std::string render_text(const Json& j, bool color) {
  std::string out;
  text(j, 0, color, out);
  return out;
}

}  // namespace plab
