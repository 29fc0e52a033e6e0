#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace horn::cli {

/// Exit codes.
enum Exit : int { verified = 0, counterexample = 1, usage = 2, budget_exceeded = 3 };

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horn::cli
