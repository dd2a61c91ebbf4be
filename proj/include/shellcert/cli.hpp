#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shellcert::cli {

/// Exit status contract of the command-line tool.
enum ExitCode : int {
  kAffirmative = 0,
  kNegative = 1,
  kUsageOrInput = 2,
  kBudgetOrCapacity = 3,
};

/// Runs one invocation; `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shellcert::cli
