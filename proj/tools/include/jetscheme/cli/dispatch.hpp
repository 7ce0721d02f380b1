#pragma once

// In-process entry point of the jetscheme command-line tool.

#include <iosfwd>
#include <string>
#include <vector>

namespace jetscheme::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Environment variable that overrides the default census budget.
inline constexpr const char* kBudgetEnv = "JETSCHEME_CENSUS_BUDGET";

// Parses `args` (without the program name), runs one subcommand and writes its report to `out`
// and diagnostics to `err`. Matrix input falls back to `in` when neither --file nor --matrix is
// given. Returns 0 on success, 1 on domain errors and 2 on usage or parse errors.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace jetscheme::cli
