#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rook::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitInputError = 2;

/// Runs one CLI invocation. args excludes the program name. JSON results
/// go to out, error JSON to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rook::cli
