#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cspec::cli {

// Exit codes.
inline constexpr int kAllPass = 0;
inline constexpr int kNotAllPass = 1;
inline constexpr int kUsageError = 2;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace cspec::cli
