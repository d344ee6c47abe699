#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domgame::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs the command line with explicit streams so tests can drive it
/// in-process. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace domgame::cli
