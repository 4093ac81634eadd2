#pragma once

#include <ostream>

namespace hexwalk::cli {

/// Exit codes: 0 ok, 1 validation error, 2 numerical failure, 3 I/O.
enum ExitCode : int { kOk = 0, kValidation = 1, kNumerical = 2, kIo = 3 };

/// Full command-line entry point (subcommand dispatch included).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hexwalk::cli
