#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flowcat {

/// Exit codes shared by every command.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 3;
inline constexpr int kExitError = 2;

/// Runs the command line `args` (args[0] is the program name), writing results
/// to `out` and diagnostics to `err`. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowcat
