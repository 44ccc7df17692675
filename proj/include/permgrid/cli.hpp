#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permgrid {

/// Runs one CLI command. Exit status: 0 success, 1 usage or argument error,
/// 2 verification failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permgrid
