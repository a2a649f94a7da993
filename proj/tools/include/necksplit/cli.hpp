#pragma once

#include <iosfwd>

namespace necksplit::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kNonConvergence = 2,
    kVerificationFailed = 3,
};

/// Entry point of the `necksplit` tool. Results go to --out (stdout when
/// absent); diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace necksplit::cli
