#ifndef NEARPRIME_TOOLS_CLI_HPP_
#define NEARPRIME_TOOLS_CLI_HPP_

#include <ostream>

namespace nearprime::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kContradiction = 2,
  kUsage = 3,
};

/// Runs the command line; all output goes to `out` and `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace nearprime::cli

#endif // NEARPRIME_TOOLS_CLI_HPP_
