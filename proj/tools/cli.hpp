#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kpvc::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kUsageError = 2 };

/// Runs the kpvc command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace kpvc::cli
