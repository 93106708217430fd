#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace genbell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name), runs the subcommand and writes
/// its record to `out` (or --out). Diagnostics go to `err`. Returns the exit
/// code: 0 on success, 1 when a verification fails or a computation cannot
/// finish, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genbell::cli
