#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tguard::cli {

enum ExitCode : int {
  kOptimal = 0,
  kInputError = 1,
  kInfeasible = 2,
  kOracleMismatch = 3,
};

/// Runs the solver command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tguard::cli
