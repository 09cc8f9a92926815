#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace delorder {

/// Runs the command-line tool on the given arguments (program name not
/// included) writing to the supplied streams. Returns the process exit
/// code: 0 success, 2 bad input, 3 resource cap hit, 4 invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delorder
