#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddist {

// Runs one command line (args[0] is the program name). Reports go to out
// unless --output is given; failures print {"error", "message"} JSON to err.
// Returns the process exit code: 0 ok, 1 validation, 2 degeneracy, 3 I/O.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ddist
