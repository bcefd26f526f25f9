#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chaincalc {

/// Run the command line given args (without the program name). Results go to
/// `out`, single-line diagnostics to `err`. Exit status: 0 success, 1
/// verification failure, 2 invalid input, 3 overflow.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace chaincalc
