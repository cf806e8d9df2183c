#pragma once

#include <iosfwd>

namespace quatinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoInverse = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `quatinv` invocation. Human-readable output goes to `out`,
/// diagnostics to `err`; JSON goes to the --json path ("-" for `out`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quatinv::cli
