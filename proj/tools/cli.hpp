#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddcol::cli {

enum ExitCode : int { Ok = 0, Refuted = 1, Usage = 2, OutOfBudget = 3 };

/// Runs the command line `args` (without the program name). Reads "-"
/// inputs from `in`.
auto run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) -> int;

}  // namespace oddcol::cli
