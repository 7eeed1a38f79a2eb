#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace extremal {

enum ExitCode : int {
  exit_ok = 0,
  exit_verification_failed = 1,
  exit_usage = 2,
  exit_solver_failure = 3,
};

/// Entry point of the `extremal` tool. args excludes the program name.
/// Output goes to `out` unless --out names a file (relative paths resolve
/// against $EXTREMAL_OUTPUT_DIR when it is set); diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extremal
