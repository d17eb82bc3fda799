#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace egobw::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kInputError = 3,
};

/// Scores in output: 12 significant digits, shortest form, C locale.
std::string format_score(double value);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace egobw::cli
