#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ltk::cli {

/// Exit codes: 0 success, 1 a check came out negative (falsified, not primitive,
/// no preimage), 2 usage, parse or resource errors.
enum ExitCode : int {
    kOk = 0,
    kNegative = 1,
    kError = 2,
};

/// Runs the `ltk` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ltk::cli
