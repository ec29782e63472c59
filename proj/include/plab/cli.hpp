#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plab/errors.hpp"

namespace plab {

struct UsageError : Error {
  using Error::Error;
};

enum class Format { Json, Text };

struct CommandConfig {
  std::string command;  // "curve", "plucker", "heisenberg", "chow", "scenario"
  std::string action;   // "analyze", "dual", ...; empty for chow
  std::optional<std::string> input;  // inline polynomial text
  std::optional<std::string> file;   // polynomial file
  std::optional<std::string> point;  // heisenberg orbit
  std::vector<std::string> vars{"x0", "x1", "x2"};
  bool vars_given = false;
  std::optional<std::string> lambda;
  Format format = Format::Json;
  std::optional<std::string> out;
  bool quadratic_map = false;
  bool color = false;
  // numeric arguments of plucker and chow
  std::optional<long> d, g, m, nodes, cusps, tacnodes;
};

struct CliResult {
  int exit_code = 0;
  std::string output;  // report for stdout (empty when written to --out)
  std::string error;   // one-line diagnostic for stderr
};

/// Command line (without the program name) to a validated config.  Throws
/// UsageError; `--help` is reported through HelpRequested.
CommandConfig parse_args(const std::vector<std::string>& args);

struct HelpRequested : Error {
  using Error::Error;  // what() is the help text
};

/// Runs the command: exit 0 on success, 1 on infeasible or failed checks,
/// 2 on usage errors.
CliResult dispatch(const CommandConfig& config);

/// parse_args + dispatch; reads PLUCKER_LAB_COLOR.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace plab
