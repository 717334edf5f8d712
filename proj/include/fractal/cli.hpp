#pragma once

#include <iosfwd>

namespace fractal {

// Exit codes: 0 success, 1 computation or check failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fractal
