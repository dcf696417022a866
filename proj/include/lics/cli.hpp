#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lics::cli {

/// Exit codes: 0 success, 1 domain-level negative (not in V, Jacobi fails,
/// unknown family), 2 usage or parse failure.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lics::cli
