#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cartan {

/// Exit codes: 0 ok, 1 verification failure, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

/// Runs the command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cartan
