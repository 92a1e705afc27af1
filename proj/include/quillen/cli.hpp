#pragma once

#include <iosfwd>

namespace quillen::cli {

enum ExitCode : int {
  kOk = 0,
  kContractFailure = 1,
  kParseError = 2,
  kBudgetExhausted = 3,
  kInternalError = 4,
};

/// Runs one command-line invocation. Documents go to `out` unless --out is
/// given; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quillen::cli
