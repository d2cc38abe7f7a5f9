#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minorforge::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInputError = 2,
  kIneligible = 3,
  kSamplerExhausted = 4,
};

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minorforge::cli
