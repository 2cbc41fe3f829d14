#ifndef CROSSMAX_CLI_HPP
#define CROSSMAX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace crossmax::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
    ok = 0,
    /// A verification ran and did not pass, or a queried scheme is infeasible.
    failed = 1,
    usage = 2,
    /// An exact solver refused the instance size or ran out of time.
    limit = 3,
};

/// Runs one command line (without the program name), printing key=value
/// lines to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossmax::cli

#endif  // CROSSMAX_CLI_HPP
