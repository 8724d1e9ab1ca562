#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace besselhit::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInstability = 3;

// Runs one command line (without the program name). Results go to `out`
// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace besselhit::cli
