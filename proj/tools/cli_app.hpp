#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace avoid::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDiscrepancy = 1;
inline constexpr int kUserError = 2;
inline constexpr int kCeiling = 3;

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avoid::cli
