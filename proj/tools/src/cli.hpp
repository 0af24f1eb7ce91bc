#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpheat::cli {

/// Exit codes of the lpheat tool.
enum ExitCode : int {
    kPass = 0,
    kVerificationFailure = 1,
    kUsage = 2,
    kNumeric = 3,
};

/// Runs the tool on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpheat::cli
