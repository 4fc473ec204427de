#pragma once

#include <iosfwd>

namespace wcc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kGuardRefused = 3,
};

// Entry point of the wcclab tool. Results go to `out` (or --output),
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wcc::cli
