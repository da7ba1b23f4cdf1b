#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fdg::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // verify suite reported failures
  kUsage = 2,
  kCapExceeded = 3,
  kBudget = 4,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Reports go to --out when given, otherwise to `out`;
/// diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdg::cli
