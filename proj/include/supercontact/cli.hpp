#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace supercontact {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `supercontact` tool. `args` excludes the program name.
/// Subcommands: verify, xf, bracket, basis, embed, table.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supercontact
