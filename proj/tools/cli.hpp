#ifndef AIRCOMP_TOOLS_CLI_HPP
#define AIRCOMP_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace aircomp::tools {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kSuccess = 0, kSolverFailure = 1, kUsageError = 2 };

/// Runs the command line `args` (args[0] is the program name). CSV goes to
/// `out` unless --out names a directory; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "1,2.5,3" into doubles. Throws std::invalid_argument on junk.
std::vector<double> parse_real_list(const std::string& text);

}  // namespace aircomp::tools

#endif  // AIRCOMP_TOOLS_CLI_HPP
