#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcgraph::cli {

enum ExitCode : int {
    kOk = 0,
    kDisagreement = 1,
    kUsage = 2,
    kBudget = 3,
};

/// Runs one subcommand. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcgraph::cli
