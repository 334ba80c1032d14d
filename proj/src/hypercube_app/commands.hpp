#pragma once

// Subcommand handlers behind the hypercube executable.

#include <iosfwd>
#include <string>
#include <vector>

namespace hypercube::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypercube::app
