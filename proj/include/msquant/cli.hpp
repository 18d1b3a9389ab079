#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msq::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kInfeasible = 3, kIo = 4 };

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msq::cli
