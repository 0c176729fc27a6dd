#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace syt {

/// Runs one CLI command (args exclude the program name) and returns the
/// process exit code: 0 on success, nonzero on any error or failed claim.
/// Normal output goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace syt
