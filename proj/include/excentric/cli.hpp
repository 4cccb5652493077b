#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace excentric::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int { kSuccess = 0, kMismatch = 1, kUsage = 2, kDomain = 3 };

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (and to the --out file when given), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace excentric::cli
