#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shapetile::cli {

// Exit codes.
inline constexpr int kOk = 0;            // success, verdict delivered
inline constexpr int kVerifyFailed = 1;  // certificate rejected
inline constexpr int kUsageError = 2;    // parse or usage error
inline constexpr int kInconclusive = 3;  // search exhausted its bounds

/// Runs one invocation.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shapetile::cli
