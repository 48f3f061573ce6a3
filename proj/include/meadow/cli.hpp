#pragma once

// Command dispatch for the `meadow` executable.

#include <ostream>
#include <string>
#include <vector>

namespace meadow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meadow::cli
