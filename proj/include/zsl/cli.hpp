#pragma once

#include <ostream>

namespace zsl {

/// Exit codes of the zslab command line.
enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_guard = 3,
};

/// Runs the command line. All regular output goes to `out`, diagnostics to
/// `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zsl
