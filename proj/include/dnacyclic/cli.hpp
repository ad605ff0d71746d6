#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dnacyclic {

// Runs the command-line tool on the given arguments (without the program
// name).  Returns the process exit code: 0 success, 1 validation error,
// 2 cap exceeded, 3 selfcheck failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dnacyclic
