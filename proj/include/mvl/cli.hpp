#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvl::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_no_certificate = 2,
    exit_invariant = 3,
};

// Runs one command line (without the program name). JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvl::cli
