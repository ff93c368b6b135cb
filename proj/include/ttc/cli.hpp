#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ttc::cli {

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ttc::cli
