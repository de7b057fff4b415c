#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace betaword {

// Exit codes: 0 success, 1 verification failure, 2 invalid expansion, 64 usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidExpansion = 2;
inline constexpr int kExitUsage = 64;

/// Runs one CLI invocation (args exclude the program name). In-process to
/// keep the exit-code and byte-output contract unit-testable.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betaword
