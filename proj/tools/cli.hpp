#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace optrig::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,      // I/O, malformed file, bad usage
  kPrecondition = 2,    // NotAccretive, SingularOperator, ZeroRelativeOperator, ...
  kSelfCheckFailed = 3, // RouteDisagreement, cross-check or oracle delta exceeded
};

/// Runs one optrig invocation. args excludes the program name. The report
/// goes to out, diagnostics and errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace optrig::cli
