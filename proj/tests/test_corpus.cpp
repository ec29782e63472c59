#include <random>
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "plab/cli.hpp"
#include "plab/corpus.hpp"

using namespace plab;

namespace {

std::string golden_path(const std::string& name) { return std::string(PLAB_GOLDEN_DIR) + "/" + name; }

// Compares the CLI output with a stored file; PLAB_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::vector<std::string>& args, int code = 0) {
  CliResult r = run_cli(args);
  CHECK(r.exit_code == code);
  CHECK(r.error.empty());
  const char* update = std::getenv("PLAB_UPDATE_GOLDEN");
  if (update && std::string(update) == "1") {
    std::ofstream(golden_path(name), std::ios::binary) << r.output;
    return;
  }
  std::ifstream in(golden_path(name), std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK_MESSAGE(ss.str() == r.output, "golden mismatch for " << name);
}

}  // namespace

TEST_CASE("corpus lookup") {
  CHECK(corpus_curve("cuspidal-cubic").curve().degree() == 3);
  CHECK_THROWS_AS(corpus_curve("nope"), DomainError);
  for (const auto& c : builtin_corpus()) CHECK(c.curve().equation().is_homogeneous());
}

TEST_CASE("main theorem scenario passes without notes") {
  ScenarioReport r = run_main_theorem();
  CHECK(r.passed());
  CHECK(r.notes.empty());
  CHECK(r.checks.size() >= 9);
  for (const auto& c : r.checks) {
    CHECK(c.criterion.rfind("AC", 0) == 0);
    CHECK_MESSAGE(c.passed, c.name);
  }
}

TEST_CASE("special scenario") {
  ScenarioReport r = run_special_case(Eis(2));
  CHECK(r.passed());
  CHECK(r.invariants["singular_locus_complete"] == true);
  CHECK(r.invariants["singular_points"].size() == 9);
  CHECK(r.invariants["exceptional_lambda"].size() == 3);
  CHECK_THROWS_AS(run_special_case(Eis(1)), DomainError);
  CHECK_THROWS_AS(run_special_case(Eis::rho()), DomainError);
}

TEST_CASE("special scenario at random admissible lambda") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int i = 0; i < 5; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (q == 1) continue;
    ScenarioReport r = run_special_case(Eis(q));
    CHECK_MESSAGE(r.passed(), q.get_str());
    for (const auto& o : r.invariants["orbits"]) CHECK(o["exceptional_complete"] == true);
  }
}

TEST_CASE("golden reports") {
  check_golden("scenario_main.json", {"scenario", "main"});
  check_golden("scenario_main.txt", {"scenario", "main", "--format", "text"});
  check_golden("scenario_special_2.json", {"scenario", "special", "--lambda", "2"});
  check_golden("scenario_special_m1_2.txt", {"scenario", "special", "--lambda", "-1/2", "--format", "text"});
  check_golden("curve_analyze_cuspidal.json", {"curve", "analyze", "x1^2*x2 - x0^3"});
  check_golden("curve_dual_fermat.json", {"curve", "dual", "x0^3 + x1^3 + x2^3"});
  check_golden("heisenberg_fixed.json", {"heisenberg", "fixed"});
  check_golden("heisenberg_group.txt", {"heisenberg", "group", "--format", "text"});
  check_golden("chow_report_3.json", {"chow", "report", "--d", "3"});
  check_golden("plucker_solve_9_28_18.json", {"plucker", "solve", "--d", "9", "--g", "28", "--m", "18"}, 1);
}
