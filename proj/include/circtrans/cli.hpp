#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circtrans {

enum ExitCode : int {
  exit_ok = 0,
  exit_parse = 1,
  exit_incompatible = 2,
  exit_solver = 3,
  exit_verify = 4,
  exit_census = 5,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circtrans
