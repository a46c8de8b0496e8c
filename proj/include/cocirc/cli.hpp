#pragma once

#include <iosfwd>

namespace cocirc::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIncomplete = 2 };

/// Entry point of the cocirc tool. Reports go to --out (or `out`), diagnostics to `err`.
///
/// Exit codes: 0 success, 1 invalid input, 2 a minimization did not converge
/// (minimize/certify/scan) or an inequality was violated.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cocirc::cli
