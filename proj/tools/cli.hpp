#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crn::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crn::cli
