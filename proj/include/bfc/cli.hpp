#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bfc {

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int verification_failed = 1;
inline constexpr int usage = 2;
} // namespace exit_code

/// Runs the command line `bfc <args...>` (args excludes the program name)
/// writing results to `out` and diagnostics to `err`; returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bfc
