#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcm::cli {

/// Exit codes of the pcm tool.
enum ExitCode : int {
  kSuccess = 0,
  /// No consistent completion, no admissible completion, or target MT unreached.
  kDomainNegative = 1,
  /// Bad flags, unreadable or invalid matrix file.
  kUsageError = 2,
};

/// Runs the tool. `args` excludes the program name, e.g.
/// {"complete", "m.csv", "--mode=consistent"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcm::cli
