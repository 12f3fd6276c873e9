#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homalg::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kVerdictNegative = 1,
  kInputError = 2,
  kResourceCap = 3,
  kParameterError = 4,
  kInternalError = 5,
};

/// Runs one command line (without the program name). Graph operands named
/// "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace homalg::cli
