#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stix::cli {

inline constexpr const char* kSchemaVersion = "stable-index/1";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kInconclusive = 3,
};

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stix::cli
