#pragma once

#include <ostream>

namespace p3vc::cli {

// exit codes
constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_usage = 2;

/// Runs the command line `argv` writing results to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace p3vc::cli
