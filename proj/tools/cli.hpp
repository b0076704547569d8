#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace whit::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kParseError = 2,
    kSingularPsi = 3,
    kInternal = 4,
};

/// Runs one command line (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace whit::cli
