#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqcoh::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kInputError = 2;
inline constexpr int kPrecondition = 3;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace eqcoh::cli
