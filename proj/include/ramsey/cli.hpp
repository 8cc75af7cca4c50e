#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey {

// Dispatches one subcommand. Exit codes: 0 = computed, 2 = the outcome is
// Unknown or budget-limited, 3 = input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramsey
