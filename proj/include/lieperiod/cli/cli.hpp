// `lieperiod` command line: verify | relations | period | kernel.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lieperiod::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_check_failure = 1;
inline constexpr int exit_usage = 2;

/// Parses args (args[0] is the program name), runs the command, writes the
/// report to out and diagnostics to err, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieperiod::cli
