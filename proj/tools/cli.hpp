#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace famdirac::cli {

enum ExitCode { ok = 0, check_failed = 1, invalid_input = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out` as JSON (or a table for `sl2 demo`); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace famdirac::cli
