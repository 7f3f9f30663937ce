#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgm {
namespace cli {

// Exit codes: 0 success, 2 validation/parse error, 3 budget refusal,
// 4 internal mismatch (oracle self-test).
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitMismatch = 4;

// Runs one command. `args` excludes the program name; `in` backs "--input -".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace cli
} // namespace sgm
