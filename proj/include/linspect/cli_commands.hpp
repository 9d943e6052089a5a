#ifndef LINSPECT_CLI_COMMANDS_HPP
#define LINSPECT_CLI_COMMANDS_HPP

#include <string>
#include <vector>

namespace linspect::cli {

/// Exit codes shared by every subcommand.
enum ExitCode {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_budget = 3,
    exit_parse = 4,
};

/// Runs one CLI invocation (arguments without the program name) and returns
/// the process exit code. Output goes to stdout/stderr.
int run_command(const std::vector<std::string>& args);

}  // namespace linspect::cli

#endif
