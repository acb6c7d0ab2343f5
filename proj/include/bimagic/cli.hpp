#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bimagic {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs `bimagic <subcommand> ...`; args excludes the program name. Input
// path "-" reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace bimagic
