#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arithdyn::cli {

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics and WARN lines to `err`.
///
/// Exit codes: 0 success, 1 failed verification (or a WARN under --strict),
/// 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arithdyn::cli
