#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dissect::cli {

enum ExitCode : int { ok = 0, usage_error = 1, verification_failed = 2, capacity_exceeded = 3 };

// Runs one command line (without the program name). All output goes to the
// given streams; the return value is the process exit status.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dissect::cli
