#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sasaki::cli {

// Runs one CLI invocation (args without the program name). Exit codes:
// 0 success, 2 validation/usage error, 1 internal assertion failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sasaki::cli
