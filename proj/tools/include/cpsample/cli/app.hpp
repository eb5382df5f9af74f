#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpsample::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,     // bad flags or parameter values
  kExitIo = 2,        // missing files, parse failures, shape mismatches
  kExitContract = 3,  // numeric or contract violations
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpsample::cli
