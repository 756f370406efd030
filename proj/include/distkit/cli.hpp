#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace distkit::cli {

/// Exit codes: 0 success, 1 input error, 2 verification mismatch.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kMismatch = 2;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace distkit::cli
