#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fibgreedy::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitDisagreement = 3;

// Runs one command. `args` excludes the program name, e.g.
// {"classify", "--seq", "fibonacci", "--theta", "27/50"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibgreedy::cli
