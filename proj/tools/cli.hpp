#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatdef::cli {

/// Exit codes: 0 success (including negative mathematical verdicts),
/// 1 usage error, 2 input or validation error.
enum ExitCode : int { kOk = 0, kUsage = 1, kInput = 2 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatdef::cli
