#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sphere::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitData = 2,
    kExitInternal = 3,
};

/// Parses `args` (without the program name), resolves the layered config and
/// runs one subcommand. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace sphere::cli
