#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eacat::cli {

// Exit codes: 0 every check passed, 1 some check failed or was refused,
// 2 usage, parse or guard errors.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

/// args excludes the program name. Model files named "-" are read from stdin.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace eacat::cli
