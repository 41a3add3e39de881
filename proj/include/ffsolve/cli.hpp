#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffsolve {

// Dispatches one command line (without argv[0]) and writes the report to
// `out`.  Returns the process exit code: 0 ok, 1 usage/parse error,
// 2 mathematical failure, 3 internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ffsolve
