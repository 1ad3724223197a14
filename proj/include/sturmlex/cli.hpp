#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sturmlex::cli {

inline constexpr int kExitConsistent = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitIndeterminate = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBadSpec = 65;

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sturmlex::cli
