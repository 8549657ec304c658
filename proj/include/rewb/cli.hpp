#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace rewb::cli {

inline constexpr int kExitMatched = 0;
inline constexpr int kExitNoMatch = 1;
inline constexpr int kExitUsage = 2;

/// Longest subject accepted by `--algo brute`.
inline constexpr std::size_t kBruteCap = 48;

/// Runs one invocation. `args` excludes the program name. Returns the exit
/// code: 0 matched or success, 1 no match (or a divergence in `check`),
/// 2 usage, pattern or I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rewb::cli
