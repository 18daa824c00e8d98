#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lame::cli {

// Runs one command line; returns the process exit code.
// 0 success, 1 numerical failure, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace lame::cli
