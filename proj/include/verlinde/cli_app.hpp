#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace verlinde {

/// Runs the command-line tool; args exclude the program name.
/// Exit codes: 0 success, 1 failed cross check or route mismatch, 2 usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace verlinde
