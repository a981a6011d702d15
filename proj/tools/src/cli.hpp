#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricred::cli {

enum ExitCode : int { kOk = 0, kOther = 1, kParse = 2, kPrecondition = 3, kDegenerate = 4, kCap = 5 };

/// Runs one command; args exclude the program name. Input comes from the
/// positional path argument, or from `in` when absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace toricred::cli
