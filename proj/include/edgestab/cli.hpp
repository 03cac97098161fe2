#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgestab {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_bad_input = 2,
    exit_budget = 3,
};

/// Runs one invocation. `args` excludes the program name. Graph input is
/// read from `in` unless --input names a file.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace edgestab
