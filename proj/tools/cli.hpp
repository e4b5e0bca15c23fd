#pragma once

// Command-line front end; `run_cli` is the whole program minus process setup.

#include <iosfwd>
#include <string>
#include <vector>

namespace projrep {

/// args[0] is the program name. Returns the process exit status:
/// 0 success, 1 some check failed, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace projrep
