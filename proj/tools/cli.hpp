#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bruhat {

/// Run the command-line tool on the given arguments (program name not
/// included). Exit codes: 0 success, 1 negative mathematical verdict,
/// 2 usage error, 3 class too large / budget exhausted.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bruhat
