#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace deltacolor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Exit 0 on valid output, 1 when an
// algorithm or verification fails, 2 on bad usage or unreadable input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deltacolor::cli
