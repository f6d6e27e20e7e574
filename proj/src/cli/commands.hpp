#pragma once

namespace curvedcp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitConvergence = 3;
inline constexpr int kExitIo = 4;

/// Full command-line entry point (subcommands: beta-table, matsubara-curves,
/// potential, orientation-scan). Returns one of the exit codes above.
int run(int argc, const char* const* argv);

}  // namespace curvedcp::cli
