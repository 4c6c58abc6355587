#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibtan::cli {

/// Exit codes. Exactly one applies to every invocation.
inline constexpr int exit_verified = 0;
inline constexpr int exit_failed = 1;  // falsified or inconclusive
inline constexpr int exit_usage = 2;
inline constexpr int exit_internal = 3;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fibtan::cli
