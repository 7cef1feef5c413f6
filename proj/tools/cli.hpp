#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zass::cli {

// Exit codes: 0 when every executed check passed, 1 on a failed check,
// 2 on argument or input errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zass::cli
