#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mumw::cli {

/// Parses `args` (without the program name), runs the command and writes its
/// report to --out or `out`. Errors go to `err` as a one-line JSON object.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mumw::cli
