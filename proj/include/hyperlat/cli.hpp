#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperlat {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_singularity = 3 };

/// Runs `hyperlat <command> [flags]`; `args` excludes the program name.
/// Reports go to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlat
