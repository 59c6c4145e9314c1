#pragma once

// The `etaricci` command-line front end as a library call.

#include <iosfwd>
#include <string>
#include <vector>

namespace etaricci {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerdictFail = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etaricci
