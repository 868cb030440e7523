#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtwist::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kNumerical = 3,
};

/// Runs one subcommand.  `args` excludes the program name.  Results go to
/// `out` (or to the file named by --out-file), diagnostics and usage text to
/// `err`.  Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtwist::cli
