#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gemcraft {

/// Exit codes of the command-line tool.
enum ExitCode {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,         // parse or validation failure
  kExitPrecondition = 3,  // input of the wrong class
  kExitConsistency = 4,   // internal check failed
};

/// Runs the tool on `args` (without the program name). Reads "-" inputs
/// from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gemcraft
