#ifndef HURWITZ_CLI_HPP
#define HURWITZ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hurwitz {

/// Process exit codes.
enum ExitCode : int {
  kExitHolds = 0,
  kExitFails = 1,
  kExitUnknown = 2,
  kExitUsage = 3,
  kExitCapability = 4,
  kExitInternal = 5,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out is given; diagnostics go to `err`. Reads
/// HURWITZ_BUDGET for the default operation budget.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz

#endif  // HURWITZ_CLI_HPP
