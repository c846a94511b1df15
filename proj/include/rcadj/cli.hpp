#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcadj::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

// Runs one command line (without the program name). Data goes to `out` (or
// the --output file), warnings and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcadj::cli
