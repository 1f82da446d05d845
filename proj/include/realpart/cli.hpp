#pragma once

#include <string>
#include <vector>

namespace realpart::cli {

enum ExitCode : int {
  kSuccess = 0,
  kAssertionFailure = 1,
  kUsageError = 2,
  kNonConvergence = 3,
};

struct Outcome {
  int exit_code = kSuccess;
  std::string output;  ///< serialized JSON or CSV
  std::string error;   ///< diagnostic for stderr
  std::string out_path;  ///< --out target; empty means stdout
};

/// Parses `args` (without the program name) and runs the sub-command. The
/// default tolerance 1e-10 is replaced by $REALPART_TOL when set, and by
/// --tol when given. Never throws; failures are mapped to exit codes.
Outcome run(const std::vector<std::string>& args);

/// run() followed by writing the output to stdout or the --out file.
/// Returns the exit code.
int main_entry(int argc, char** argv);

}  // namespace realpart::cli
