#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knockout::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,  // verification failure or tied profile
  kUsage = 2,   // bad arguments, unreadable input, I/O failure
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knockout::cli
