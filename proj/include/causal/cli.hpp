#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace causal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndefined = 3;

/// Runs one subcommand (classify, simulate, chi-dump, check). `args`
/// excludes the program name. Verdicts never change the exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace causal::cli
