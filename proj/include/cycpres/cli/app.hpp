#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cycpres::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,
  kExitUsage = 2,
  kExitInapplicable = 3,
  kExitIo = 4,
  kExitInternal = 5,  // an unexpected exception, e.g. two computation routes disagreeing
};

/// Runs the command line `args` (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

} // namespace cycpres::cli
