#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpfb::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_parse_error = 2;
inline constexpr int exit_precondition = 3;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpfb::cli
