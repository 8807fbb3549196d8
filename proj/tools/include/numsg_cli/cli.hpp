#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace numsg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
/// A verification mismatch or an internal consistency failure.
inline constexpr int kExitCheckFailed = 3;

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numsg::cli
