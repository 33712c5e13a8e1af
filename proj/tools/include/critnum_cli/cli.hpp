#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace critnum::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // mismatch in a sweep, invalid witness, I/O error
inline constexpr int kUsage = 2;    // invalid arguments

/// Runs `critnum <subcommand> ...`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace critnum::cli
