#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypmass::cli {

enum ExitCode : int { kPass = 0, kContractViolation = 1, kUsageError = 2, kNumericalError = 3 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypmass::cli
