#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oldset::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitDisagreement = 4;

/// Runs one invocation; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oldset::cli
