#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace landscape {

// Entry point of the command-line tool.  `args` excludes the program name.
// Structured records go to `out`; diagnostics, progress, and error messages
// go to `err`.  Exit codes: 0 success, 1 invalid input or exceeded table
// guard, 2 conjecture violation or failed verification, 3 numerical failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace landscape
