#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "plab/curve.hpp"

namespace plab {

using Json = nlohmann::ordered_json;

struct CorpusCurve {
  std::string name;
  std::string text;  // in x0, x1, x2
  PlaneCurve curve() const;
};

/// conic, fermat-cubic, nodal-cubic, cuspidal-cubic, tacnodal-quartic, ...
const std::vector<CorpusCurve>& builtin_corpus();
const CorpusCurve& corpus_curve(const std::string& name);

struct Check {
  std::string criterion;  // AC id
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ScenarioReport {
  std::string id;
  Json inputs = Json::object();
  Json invariants = Json::object();
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const;
  void check(std::string criterion, std::string name, bool ok, std::string detail = {});
};

/// The sextic D(lambda) with the group orbits, its cusps and the numerology
/// of V = 3E + l1 + ... + l9.  Throws DomainError when lambda^3 = 1.
ScenarioReport run_special_case(const Eis& lambda);

/// Node, cusp, flex and bitangent counts of the degree-18 curves and the
/// numbers they are derived from.
ScenarioReport run_main_theorem();

}  // namespace plab
