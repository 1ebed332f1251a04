#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace peakval {

// Runs the command line tool on `args` (program name excluded).
// Returns 0 on success, 1 when a verification fails, 2 on invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace peakval
