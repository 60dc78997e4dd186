#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace catquot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;   ///< a checked condition or identity fails
inline constexpr int kExitInput = 2;    ///< unreadable or invalid input
inline constexpr int kExitInternal = 3; ///< a self-check fired

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`; nothing is thrown.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace catquot::cli
