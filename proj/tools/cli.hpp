#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace severi::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { success = 0, verification_failure = 1, usage_error = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace severi::cli
