#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brauer::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

/// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brauer::cli
