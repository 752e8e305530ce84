#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treecolor {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,         // success or positive verdict
    kExitNegative = 1,   // negative verdict: not colorable, check failed, ...
    kExitUsage = 2,      // bad arguments or malformed input
    kExitBudget = 3,     // expansion budget exceeded
};

/// Runs one command. `args` excludes the program name. JSON goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treecolor
