#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lisrc::cli {

/// Exit statuses. With --exit-status, YES maps to 0 and NO to 1; without it
/// both answers exit 0. Errors and usage problems always exit 2.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kError = 2;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lisrc::cli
