#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wreath::cli {

enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wreath::cli
