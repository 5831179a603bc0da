#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace a2::cli {

enum ExitCode { kOk = 0, kInvalidInput = 1, kVerificationFailed = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace a2::cli
