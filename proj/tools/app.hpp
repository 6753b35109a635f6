#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ineqlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumeric = 3;

/// Runs the command line `args` (args[0] is the program name). Results go
/// to `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ineqlab::cli
