#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heis::cli {

/// Stable exit codes of the heistri tool.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
};

/// Runs the tool on `args` (without the program name). Reads "-" inputs
/// from `in`; writes results to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Parses an angle such as "1.047", "pi/3", "-2pi/3" or "0.5pi".
/// Throws std::invalid_argument.
double parse_angle(const std::string& text);

}  // namespace heis::cli
