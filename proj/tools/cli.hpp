#pragma once

#include <iosfwd>

namespace tss::cli {

enum ExitCode : int {
  kPass = 0,
  kNegative = 1,
  kInputError = 2,
  kBudget = 3,
  kRefutation = 4,
};

// Runs one command line (argv[0] is the program name) and returns its exit
// code. Documents go to `out` unless --out names a file.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tss::cli
