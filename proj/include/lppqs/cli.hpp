#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lppqs {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_math_failure = 1, exit_usage = 2 };

/// Runs the `lppqs` command line. `args` excludes the program name.
/// Flags override LPPQS_* environment variables, which override defaults.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lppqs
