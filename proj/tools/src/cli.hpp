#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lieinv::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
    kOk = 0,
    kInvalidAlgebra = 1,
    kParseError = 2,
    kConstraint = 3,
    kFixtureMismatch = 4,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieinv::cli
