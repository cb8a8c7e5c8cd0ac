#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fakenews::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataError = 2,
  kBaselineFailure = 3,
};

// Runs one subcommand: stats | train | evaluate | predict | compare | top-terms.
// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace fakenews::cli
