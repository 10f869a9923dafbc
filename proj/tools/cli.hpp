// cli.hpp — command-line front end. run_cli takes the argument list without
// the program name and returns the process exit code:
//   0 success, 1 usage error, 2 numerical failure, 3 sweep finished with
//   NaN cells.

#pragma once

#include <string>
#include <vector>

namespace spinfloq::cli {

int run_cli(std::vector<std::string> args);

// "0.25pi" -> 0.25*pi, bare numbers are radians
double parse_angle(const std::string& text);

}  // namespace spinfloq::cli
