#pragma once

#include <ostream>

namespace tiresense::cli {

/// Entry point of the command-line tool. Returns the process exit code:
/// 0 success, 1 validation error, 2 I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tiresense::cli
