#include "plab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "plab/report.hpp"

namespace plab {

namespace {

std::vector<std::string> split_vars(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(item);
  }
  return out;
}

struct Leaf {
  CLI::App* app;
  std::string command, action;
};

}  // namespace

CommandConfig parse_args(const std::vector<std::string>& args) {
  CommandConfig cfg;
  CLI::App app{"Exact plane-curve invariants, Pluecker arithmetic and the Heisenberg action", "plucker_lab"};
  app.require_subcommand(1);
  std::string format = "json", vars;
  std::vector<Leaf> leaves;

  auto common = [&](CLI::App* sc) {
    sc->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sc->add_option("--out", cfg.out, "Write the report to this path");
  };
  auto poly_input = [&](CLI::App* sc) {
    sc->add_option("polynomial", cfg.input, "Polynomial text");
    sc->add_option("--file", cfg.file, "File holding one polynomial");
    sc->add_option("--vars", vars, "Comma-separated variable names (default x0,x1,x2)");
    sc->add_option("--lambda", cfg.lambda, "Value substituted for lambda");
  };
  auto leaf = [&](CLI::App* parent, const std::string& cmd, const std::string& name, const std::string& desc) {
    CLI::App* sc = parent->add_subcommand(name, desc);
    common(sc);
    leaves.push_back({sc, cmd, name});
    return sc;
  };

  CLI::App* curve = app.add_subcommand("curve", "Plane curve analysis")->require_subcommand(1);
  poly_input(leaf(curve, "curve", "analyze", "Singularities, flexes and genus"));
  poly_input(leaf(curve, "curve", "dual", "Dual curve (degree 2 to 4)"));
  poly_input(leaf(curve, "curve", "flexes", "Flexes via the Hessian"));

  CLI::App* plucker = app.add_subcommand("plucker", "Pluecker formulas")->require_subcommand(1);
  CLI::App* pd = leaf(plucker, "plucker", "dual", "Class, flexes, bitangents, genus from (d, nodes, cusps)");
  pd->add_option("--d", cfg.d, "Degree")->required();
  pd->add_option("--nodes", cfg.nodes, "Nodes")->required();
  pd->add_option("--cusps", cfg.cusps, "Cusps")->required();
  pd->add_option("--tacnodes", cfg.tacnodes, "Tacnodes, each counted as two nodes");
  CLI::App* ps = leaf(plucker, "plucker", "solve", "Nodes and cusps from (d, g, m)");
  ps->add_option("--d", cfg.d, "Degree")->required();
  ps->add_option("--g", cfg.g, "Geometric genus")->required();
  ps->add_option("--m", cfg.m, "Class")->required();

  CLI::App* heis = app.add_subcommand("heisenberg", "Extended Heisenberg group")->require_subcommand(1);
  leaf(heis, "heisenberg", "group", "Enumerate the group");
  leaf(heis, "heisenberg", "orbit", "Orbit of a point")->add_option("point", cfg.point, "Point a:b:c")->required();
  leaf(heis, "heisenberg", "fixed", "Fixed lines, points and triple points");
  CLI::App* cc = leaf(heis, "heisenberg", "check-curve", "Order-3 orbits lying on a curve");
  poly_input(cc);
  cc->add_flag("--quadratic-map", cfg.quadratic_map, "Compose a y-polynomial with the quadratic map first");

  CLI::App* chow = app.add_subcommand("chow", "Intersection numerology")->require_subcommand(1);
  leaf(chow, "chow", "report", "Numerology for polarization degree d")->add_option("--d", cfg.d, "d1*d2")->required();

  CLI::App* scen = app.add_subcommand("scenario", "End-to-end scenarios")->require_subcommand(1);
  leaf(scen, "scenario", "special", "Special surface E x E")->add_option("--lambda", cfg.lambda)->required();
  leaf(scen, "scenario", "main", "Degree-18 curves");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (const auto& l : leaves)
    if (l.app->parsed()) {
      cfg.command = l.command;
      cfg.action = l.action;
    }
  cfg.format = format == "text" ? Format::Text : Format::Json;
  if (!vars.empty()) {
    cfg.vars = split_vars(vars);
    cfg.vars_given = true;
    if (cfg.vars.size() != 3) throw UsageError("--vars needs exactly three names");
  }
  bool wants_poly = cfg.command == "curve" || cfg.action == "check-curve";
  if (wants_poly && cfg.input.has_value() == cfg.file.has_value())
    throw UsageError("give exactly one input: a polynomial argument or --file");
  return cfg;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

Eis parse_scalar(const std::string& text) {
  MultiPoly v = parse_poly(text, {});
  if (!v.lambda_free()) throw UsageError("--lambda must be a number");
  return v.is_zero() ? Eis() : v.leading_coefficient().constant_term();
}

MultiPoly input_poly(const CommandConfig& cfg, const std::vector<std::string>& vars) {
  std::string text = cfg.file ? read_file(*cfg.file) : *cfg.input;
  return parse_poly(text, vars);
}

PlaneCurve specialized_curve(const CommandConfig& cfg) {
  MultiPoly p = input_poly(cfg, cfg.vars);
  if (cfg.lambda) p = p.specialize_lambda(parse_scalar(*cfg.lambda));
  if (!p.lambda_free()) throw UsageError("the polynomial involves lambda; pass --lambda");
  return PlaneCurve(p);
}

long need(const std::optional<long>& v) { return *v; }

struct Outcome {
  Json report;
  bool ok = true;
};

Outcome run(const CommandConfig& cfg) {
  const std::string& a = cfg.action;
  if (cfg.command == "curve") {
    PlaneCurve c = specialized_curve(cfg);
    if (a == "analyze") return {to_json(analyze_curve(c))};
    if (a == "dual") {
      Json j{{"curve", c.equation().str()}};
      j.update(to_json(dual_curve_report(c)));
      return {j};
    }
    Json j{{"curve", c.equation().str()}};
    j.update(to_json(flexes(c)));
    return {j};
  }
  if (cfg.command == "plucker") {
    if (a == "dual") {
      long nu = need(cfg.nodes) + 2 * cfg.tacnodes.value_or(0);
      try {
        return {to_json(dual_invariants(need(cfg.d), nu, need(cfg.cusps)))};
      } catch (const InfeasibleInvariants& e) {
        return {Json{{"feasible", false}, {"diagnostic", e.what()}}, false};
      }
    }
    NodeCuspSolution s = solve_nodes_cusps(need(cfg.d), need(cfg.g), need(cfg.m));
    return {to_json(s), s.feasible};
  }
  if (cfg.command == "heisenberg") {
    if (a == "group") return {group_json(enumerate_group())};
    if (a == "orbit") {
      ProjectivePoint p = parse_point(*cfg.point);
      Json j{{"point", p.str()}};
      j.update(to_json(orbit(p)));
      return {j};
    }
    if (a == "fixed") return {to_json(fixed_locus())};
    std::vector<std::string> vars = cfg.vars;
    if (cfg.quadratic_map && !cfg.vars_given) vars = yvars();
    MultiPoly p = input_poly(cfg, vars);
    std::optional<Eis> lam;
    if (cfg.lambda) lam = parse_scalar(*cfg.lambda);
    Json orbits = Json::array();
    bool contained = false;
    for (const auto& ob : curve_orbit_obstruction(p, cfg.quadratic_map)) {
      Json j = to_json(ob);
      bool on = ob.identically_zero();
      if (lam) {
        on = on || ob.obstruction(*lam).is_zero();
        j["contained_at_lambda"] = on;
      }
      contained = contained || on;
      orbits.push_back(j);
    }
    Json j{{"curve", p.str()}, {"quadratic_map", cfg.quadratic_map}};
    if (lam) j["lambda"] = lam->str();
    j["orbits"] = orbits;
    j["contains_order3_orbit"] = contained;
    if (p.vars() == yvars() && p == bl2_sextic()) j["notes"] = Json::array({sextic_interpretation_note()});
    return {j, !contained};
  }
  if (cfg.command == "chow") return {to_json(chow_report(need(cfg.d)))};
  ScenarioReport r = a == "main" ? run_main_theorem() : run_special_case(parse_scalar(*cfg.lambda));
  return {to_json(r), r.passed()};
}

}  // namespace

CliResult dispatch(const CommandConfig& cfg) {
  CliResult res;
  try {
    Outcome o = run(cfg);
    std::string text = cfg.format == Format::Json ? render_json(o.report) : render_text(o.report, cfg.color);
    res.exit_code = o.ok ? 0 : 1;
    if (cfg.out) {
      std::ofstream out(*cfg.out, std::ios::binary);
      if (!out) throw UsageError("cannot write " + *cfg.out);
      out << text;
    } else {
      res.output = text;
    }
  } catch (const UsageError& e) {
    res = {2, "", std::string("usage error: ") + e.what()};
  } catch (const ParseError& e) {
    res = {2, "", std::string("usage error: ") + e.what()};
  } catch (const UnknownVariable& e) {
    res = {2, "", std::string("usage error: ") + e.what()};
  } catch (const Error& e) {
    res = {1, "", std::string("error: ") + e.what()};
  }
  return res;
}

CliResult run_cli(const std::vector<std::string>& args) {
  CommandConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const HelpRequested& h) {
    return {0, h.what(), ""};
  } catch (const UsageError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    return {2, "", "usage error: " + msg};
  }
  const char* color = std::getenv("PLUCKER_LAB_COLOR");
  cfg.color = color && std::string(color) == "1";
  return dispatch(cfg);
}

}  // namespace plab
