#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stieltjes::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,  // I/O errors
  kUsage = 2,
  kNumericalAlarm = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stieltjes::cli
