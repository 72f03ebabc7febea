#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthorep::cli {

enum ExitCode : int { kPass = 0, kInputError = 1, kVerdictFail = 2, kDegenerate = 3, kBudget = 4 };

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthorep::cli
