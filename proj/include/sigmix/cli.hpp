#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigmix {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitSolverError = 2;

/// Runs the command line (args excludes the program name). Data goes to
/// `out`, diagnostics and usage to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigmix
