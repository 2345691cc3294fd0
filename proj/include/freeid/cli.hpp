#pragma once

#include <ostream>
#include <span>
#include <string>

namespace freeid::cli {

/// Runs the command line (without the program name). Returns the exit code:
/// 0 success, 1 failed verification or runtime error, 2 usage error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace freeid::cli
