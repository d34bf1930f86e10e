#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ekmu::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

/// Name of the environment variable giving the default worker count for `verify`.
inline constexpr const char* kParallelEnv = "EKMU_PARALLEL";

/// Runs one invocation. args excludes the program name. Data goes to out;
/// diagnostics and run metadata go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ekmu::cli
