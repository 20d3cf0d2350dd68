#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thinlie::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kStructural = 3 };

/// Runs the command line given as arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thinlie::cli
