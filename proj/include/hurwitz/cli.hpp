#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hurwitz::cli {

/// Exit codes: 0 success, 1 verification failure or discrepancy,
/// 2 usage error, scale limit or unwritable output.
enum ExitCode : int { Success = 0, Failure = 1, UsageError = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
///
/// Environment: HURWITZ_JOBS sets the default for --jobs,
/// HURWITZ_ORACLE_DMAX_CAP and HURWITZ_ORACLE_BMAX_CAP override the oracle
/// scale caps (6 and 5).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hurwitz::cli
