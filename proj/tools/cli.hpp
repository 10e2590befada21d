#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zsub::cli {

  enum ExitCode : int {
    kOk           = 0,
    kFailure      = 1,
    kParse        = 2,
    kPrecondition = 3,
    kUnstabilized = 4,
  };

  /// Runs the command line `args` (without the program name) and returns the
  /// process exit code. Results go to `out`, diagnostics to `err`.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace zsub::cli
