#pragma once

#include <ostream>

namespace dirset {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitCounterexample = 1,
  kExitInvalidInput = 2,
  kExitBudgetExceeded = 3,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dirset
