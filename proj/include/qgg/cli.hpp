#pragma once

#include <iosfwd>

namespace qgg {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagree = 1;  // oracle disagreement or a falsified prediction
inline constexpr int kExitUsage = 2;     // bad flags, unreadable or invalid input

/// Runs the qgg command line. Regular output goes to `out` (or the -o file),
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qgg
