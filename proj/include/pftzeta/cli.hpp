#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pftzeta::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kMismatch = 2,
  kGuardViolation = 3,
};

/// Runs one subcommand (normalize | present | omega | zeta | counts | verify).
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pftzeta::cli
