#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hexdual {

/// Runs the command line given as an argument vector (program name excluded).
/// Returns the process exit code: 0 on success, 1 when a verification claim
/// fails, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace hexdual
