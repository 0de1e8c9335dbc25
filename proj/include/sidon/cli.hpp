#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sidon::cli {

enum ExitCode : int { ok = 0, usage = 1, precondition = 2, inconclusive = 3 };

/// Parses args (without the program name), runs the subcommand, writes the
/// report to out and logs to err. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sidon::cli
