#include <iostream>

#include "plab/cli.hpp"

int main(int argc, char** argv) {
  plab::CliResult r = plab::run_cli({argv + 1, argv + argc});
  std::cout << r.output;
  if (!r.error.empty()) std::cerr << r.error << "\n";
  return r.exit_code;
}
