#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slspec::cli {

enum ExitCode : int {
    kOk = 0,
    kComputeError = 1,
    kConfigError = 2,
};

/// Runs one command. `args` excludes the program name. Tables go to --out or
/// to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace slspec::cli
