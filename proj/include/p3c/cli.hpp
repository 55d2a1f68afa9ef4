#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace p3c {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  exit_ok = 0,       ///< property holds / success
  exit_negative = 1, ///< property fails, nothing found, or a counterexample
  exit_input = 2,    ///< usage or input error
};

/// Runs the `p3c` command line. `args` excludes the program name. Worker
/// count for `verify` comes from the P3C_THREADS environment variable
/// (default 1).
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace p3c
