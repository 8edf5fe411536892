#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsd::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCriterionFailure = 1,  // a criterion fails or an oracle/chain check mismatches
  kUsage = 2,
  kResourceCap = 3,
};

/// Parses argv and runs one subcommand, writing results to `out` and diagnostics
/// to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsd::cli
