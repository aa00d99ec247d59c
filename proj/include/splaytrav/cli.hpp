#pragma once

#include <iosfwd>

namespace splaytrav {

/// Exit codes: 0 pass, 1 property failure, 2 usage or I/O error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point for the splaytrav command line. Output goes to `out`,
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace splaytrav
