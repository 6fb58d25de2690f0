#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixgauss::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_internal = 1,  ///< formula cross-check failure or mismatch report
    exit_usage = 2,
    exit_guard = 3,
};

/// Runs one command line (without the program name). Output goes to `out`
/// unless --out redirects it; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixgauss::cli
