#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcsd::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kIncomplete = 1;
inline constexpr int kUsage = 2;
inline constexpr int kDataError = 3;
inline constexpr int kInvariant = 4;

// Runs the command line `args` (without the program name) and returns the
// exit code. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcsd::cli
