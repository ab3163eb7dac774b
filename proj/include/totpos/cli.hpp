#pragma once

#include <iosfwd>

namespace totpos {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  ///< not ITN, verification failed, inconsistent table, ...
  kExitUsage = 2,     ///< bad arguments, unreadable or malformed input
};

/// Parses argv and runs one subcommand. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace totpos
