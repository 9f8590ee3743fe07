#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinext::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kComputationError = 1, kUsageError = 2 };

/// Runs one CLI invocation. `args` excludes the program name. Results go
/// to `out`, structured error JSON to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinext::cli
