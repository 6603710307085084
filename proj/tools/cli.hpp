#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpvc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitYes = 10;
inline constexpr int kExitNo = 20;

/// Runs the dpvc command line; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace dpvc::cli
