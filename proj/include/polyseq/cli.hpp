#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyseq {

// Runs the command-line front end. `args` excludes the program name.
// Exit codes: 0 every requested check passed, 1 identity failure,
// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyseq
