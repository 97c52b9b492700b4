#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icf
{
    /// Process exit codes of the icf tool.
    enum ExitCode : int
    {
        exit_pass = 0,
        exit_check_failed = 1,
        exit_usage = 2,
        exit_budget = 3
    };

    /// Runs the icf command line (args excludes the program name). JSON goes to
    /// out, human-readable summaries and diagnostics to err.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
