#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chernslope {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitScenarioError = 1, kExitInternalError = 2 };

/// Entry point of the `chernslope` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chernslope
