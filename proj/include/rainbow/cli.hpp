#pragma once

#include <ostream>
#include <span>
#include <string>

namespace rainbow::cli {

/// Runs one rwlab command line (without the program name). Returns 0 on
/// success, 1 on domain errors, 2 on usage errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace rainbow::cli
