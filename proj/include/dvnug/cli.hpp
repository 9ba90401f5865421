#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dvnug {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotFrame = 2;
inline constexpr int kExitInconclusive = 3;

/// Runs the tool on `args` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dvnug
