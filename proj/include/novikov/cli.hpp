#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace novikov::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. args excludes the program name. Exit codes:
/// 0 success, 1 identity failure or numeric residual above tolerance,
/// 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace novikov::cli
