#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace archfe::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace archfe::cli
