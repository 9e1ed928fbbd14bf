#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taskalloc::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitRuntime = 2,
};

/// Entry point behind the `taskalloc` binary. `args` excludes the program
/// name. Data goes to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taskalloc::cli
