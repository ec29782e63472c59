#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "plab/cli.hpp"

using namespace plab;
using nlohmann::json;

namespace {

json run_json(const std::vector<std::string>& args, int code = 0) {
  CliResult r = run_cli(args);
  CHECK(r.exit_code == code);
  return json::parse(r.output);
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("parse_args fills the config") {
  CommandConfig c = parse_args({"curve", "analyze", "x^2 + y^2 - z^2", "--vars", "x,y,z", "--format", "text"});
  CHECK(c.command == "curve");
  CHECK(c.action == "analyze");
  CHECK(c.input == "x^2 + y^2 - z^2");
  CHECK(c.vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(c.format == Format::Text);
  CommandConfig p = parse_args({"plucker", "dual", "--d", "18", "--nodes", "36", "--cusps", "72"});
  CHECK(p.d == 18);
  CHECK(p.nodes == 36);
  CHECK(p.cusps == 72);
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(parse_args({}), UsageError);
  CHECK_THROWS_AS(parse_args({"curve"}), UsageError);
  CHECK_THROWS_AS(parse_args({"curve", "analyze"}), UsageError);
  CHECK_THROWS_AS(parse_args({"curve", "analyze", "x0", "--file", "f"}), UsageError);
  CHECK_THROWS_AS(parse_args({"plucker", "dual", "--d", "3"}), UsageError);
  CHECK_THROWS_AS(parse_args({"scenario", "special"}), UsageError);
  CHECK_THROWS_AS(parse_args({"curve", "analyze", "x0", "--format", "xml"}), UsageError);
  CHECK_THROWS_AS(parse_args({"curve", "analyze", "x0", "--vars", "a,b"}), UsageError);
  CliResult r = run_cli({"bogus"});
  CHECK(r.exit_code == 2);
  CHECK(r.error.find('\n') == std::string::npos);
  CHECK(run_cli({"curve", "analyze", "x0 + + x1"}).exit_code == 2);
  CHECK(run_cli({"curve", "analyze", "x0 + x3"}).exit_code == 2);
  CHECK(run_cli({"curve", "analyze", "x0^3 - lambda*x1*x2*x0"}).exit_code == 2);
}

TEST_CASE("help exits zero") {
  CliResult r = run_cli({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("curve") != std::string::npos);
  CHECK(run_cli({"curve", "analyze", "--help"}).output.find("--lambda") != std::string::npos);
}

TEST_CASE("curve analyze example") {
  json j = run_json({"curve", "analyze", "x1^2*x2 - x0^3"});
  CHECK(j["degree"] == 3);
  REQUIRE(j["singularities"].size() == 1);
  CHECK(j["singularities"][0]["kind"] == "A2");
  CHECK(j["singularities"][0]["point"] == "(0 : 0 : 1)");
  CHECK(j["genus"] == 0);
  CHECK(j["flexes"]["count_with_multiplicity"] == 1);
}

TEST_CASE("lambda specialization") {
  json j = run_json({"curve", "analyze", "x0^3 + x1^3 + x2^3 - 3*lambda*x0*x1*x2", "--lambda", "1"});
  // lambda = 1 gives the triangle of lines (x0 + x1 + x2)(...)(...)
  CHECK(j["singularities"].size() == 3);
  CHECK(j["genus"] == -2);
  CHECK(j["reducibility_warning"] == true);
}

TEST_CASE("plucker examples") {
  json d = run_json({"plucker", "dual", "--d", "18", "--nodes", "36", "--cusps", "72"});
  CHECK(d["m"] == 18);
  CHECK(d["f"] == 72);
  CHECK(d["b"] == 36);
  json t = run_json({"plucker", "dual", "--d", "18", "--nodes", "16", "--tacnodes", "10", "--cusps", "72"});
  CHECK(t["nu"] == 36);
  json s = run_json({"plucker", "solve", "--d", "18", "--g", "28", "--m", "18"});
  CHECK(s["nu"] == "36");
  CHECK(s["kappa"] == "72");
  json bad = run_json({"plucker", "solve", "--d", "9", "--g", "19", "--m", "18"}, 1);
  CHECK(bad["feasible"] == false);
  json inf = run_json({"plucker", "dual", "--d", "3", "--nodes", "2", "--cusps", "0"}, 1);
  CHECK(inf["feasible"] == false);
}

TEST_CASE("heisenberg commands") {
  json o = run_json({"heisenberg", "orbit", "1:0:0"});
  CHECK(o["size"] == 3);
  CHECK(o["points"].size() == 3);
  json g = run_json({"heisenberg", "group"});
  CHECK(g["order"] == 18);
  json f = run_json({"heisenberg", "fixed"});
  CHECK(f["lines"].size() == 9);
  CHECK(f["points"].size() == 9);
  CHECK(f["triple_points"].size() == 12);
  json c = run_json({"heisenberg", "check-curve", "x0"});
  CHECK(c["contains_order3_orbit"] == false);
  json z = run_json({"heisenberg", "check-curve", "x0*x1*x2"}, 1);
  CHECK(z["orbits"][0]["identically_zero"] == true);
}

TEST_CASE("check-curve with the quadratic map") {
  std::filesystem::path p = temp_path("plab_sextic.txt");
  std::ofstream(p) << "(y0^6 + y1^6 + y2^6) + 2*(2*lambda^3 - 1)*(y0^3*y1^3 + y0^3*y2^3 + y1^3*y2^3)"
                      " - 6*lambda^2*y0*y1*y2*(y0^3 + y1^3 + y2^3) - 3*lambda*(lambda^3 - 4)*y0^2*y1^2*y2^2\n";
  json j = run_json({"heisenberg", "check-curve", "--file", p.string(), "--quadratic-map"});
  CHECK(j["orbits"].size() == 4);
  for (const auto& o : j["orbits"]) CHECK(o["identically_zero"] == false);
  json at1 = run_json({"heisenberg", "check-curve", "--file", p.string(), "--quadratic-map", "--lambda", "1"}, 1);
  CHECK(at1["orbits"][1]["contained_at_lambda"] == true);
  std::filesystem::remove(p);
}

TEST_CASE("file input and output path") {
  std::filesystem::path in = temp_path("plab_in.txt"), out = temp_path("plab_out.json");
  std::ofstream(in) << "x1^2*x2 - x0^2*(x0 + x2)\n";
  CliResult r = run_cli({"curve", "analyze", "--file", in.string(), "--out", out.string()});
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream f(out);
  json j = json::parse(f);
  CHECK(j["singularities"][0]["kind"] == "A1");
  CHECK(run_cli({"curve", "analyze", "--file", "/nonexistent/poly.txt"}).exit_code == 2);
  std::filesystem::remove(in);
  std::filesystem::remove(out);
}

TEST_CASE("domain errors exit 1") {
  CliResult r = run_cli({"curve", "dual", "x0^5 + x1^5 + x2^5"});
  CHECK(r.exit_code == 1);
  CHECK(r.error.rfind("error:", 0) == 0);
  CHECK(run_cli({"scenario", "special", "--lambda", "1"}).exit_code == 1);
}

TEST_CASE("identical inputs give byte-identical outputs") {
  std::vector<std::vector<std::string>> cmds{{"curve", "analyze", "x0^3 + x1^3 + x2^3"},
                                             {"heisenberg", "group"},
                                             {"scenario", "special", "--lambda", "3/2"},
                                             {"scenario", "main", "--format", "text"}};
  for (const auto& c : cmds) CHECK(run_cli(c).output == run_cli(c).output);
}

TEST_CASE("json output follows the documented schema") {
  json a = run_json({"curve", "analyze", "x1^2*x2^2 - x0^4"});
  for (const char* k : {"curve", "degree", "singularities", "singular_locus_complete", "flexes", "genus",
                        "reducibility_warning", "notes"})
    CHECK(a.contains(k));
  for (const auto& s : a["singularities"]) {
    CHECK(s["point"].is_string());
    CHECK(s["kind"].is_string());
    CHECK(s["delta"].is_number_integer());
    CHECK(s["multiplicity"].is_number_integer());
  }
  json c = run_json({"chow", "report", "--d", "5"});
  for (const char* k : {"pa_gamma", "deg_omega", "pencil_count", "deg_B", "multiplicity_bound"})
    CHECK(c[k].is_number_integer());
  json s = run_json({"scenario", "main"});
  CHECK(s["passed"] == true);
  for (const auto& chk : s["checks"]) {
    CHECK(chk["criterion"].is_string());
    CHECK(chk["passed"].is_boolean());
  }
  // json round trip
  CHECK(json::parse(s.dump()) == s);
}

TEST_CASE("color only when requested") {
  setenv("PLUCKER_LAB_COLOR", "1", 1);
  CHECK(run_cli({"scenario", "main", "--format", "text"}).output.find("\x1b[32m") != std::string::npos);
  CHECK(run_cli({"scenario", "main"}).output.find("\x1b[") == std::string::npos);
  setenv("PLUCKER_LAB_COLOR", "0", 1);
  CHECK(run_cli({"scenario", "main", "--format", "text"}).output.find("\x1b[") == std::string::npos);
  unsetenv("PLUCKER_LAB_COLOR");
}
