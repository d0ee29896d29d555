#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domino {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitUsage = 64;

/// Runs the command line front end. `in` is read when a command takes its
/// document from standard input.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace domino
