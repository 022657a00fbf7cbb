#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chipfire {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitGuard = 3;

/// Runs the chipfire command line; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chipfire
