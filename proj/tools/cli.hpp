#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metrep::cli {

// Exit codes.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metrep::cli
