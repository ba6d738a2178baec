#pragma once

#include <iosfwd>

namespace richclub::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitValidation = 3,
  kExitInternal = 4,
};

/// Entry point shared by the executable and the tests. Data goes to `out`
/// when an output path is "-"; messages and progress go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace richclub::cli
