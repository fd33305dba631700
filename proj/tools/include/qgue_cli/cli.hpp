#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgue::cli {

enum ExitCode { kOk = 0, kDiscrepancy = 1, kUsage = 2 };

/// Runs the qgue command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgue::cli
