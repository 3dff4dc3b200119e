#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcyclo::cli {

/// Exit codes: 0 success, 1 unexpected failure, 2 usage or invalid input,
/// 3 internal consistency failure (two independent computations disagree).
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_inconsistent = 3;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcyclo::cli
