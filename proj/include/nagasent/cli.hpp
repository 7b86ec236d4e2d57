#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nagasent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCompute = 3;

/// Runs the command line `args` (args[0] is the program name). Results are
/// written to `out`, diagnostics to `err`; `in` feeds `predict` when no input
/// file is given. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace nagasent::cli
