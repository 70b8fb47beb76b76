#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nsgr {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,     // verify found violations, or an internal error
    kExitInputError = 2,  // bad arguments, unparseable generators, gcd ≠ 1, bounds
    kExitDiscovery = 3,   // search found hits
};

/// Entry point of the `nsgr` tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsgr
