#pragma once

#include <iosfwd>

namespace rcsim::cli {

// Stable exit-code contract.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,  // checker verdict or hypothesis failure
  kParseError = 2,   // unreadable file, malformed JSON or bad flags
  kValidationError = 3,
};

// Entry point shared by the rcsim binary and the CLI tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rcsim::cli
