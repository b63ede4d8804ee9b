#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kaonbell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitUsage = 64;

/// Runs the tool on `args` (program name excluded). Normal output goes to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kaonbell::cli
