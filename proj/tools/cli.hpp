#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qbertrand::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_config = 2,
  exit_oracle = 3,
  exit_verify = 4,
};

/// Runs one command. `args` excludes the program name. Tables and reports go
/// to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbertrand::cli
