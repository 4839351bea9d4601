#pragma once

namespace grlmp::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kValidationError = 2,
  kDegenerateData = 3,
  kToleranceFailure = 4,
};

int run(int argc, char** argv);

}  // namespace grlmp::cli
