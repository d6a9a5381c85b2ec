#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lfc::cli {

// Exit-code contract shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,   // check or diff found an undocumented failure
    kUsage = 2,         // invalid flags, field or input file
    kMismatch = 3,      // closed form and oracle disagree in --mode both
};

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lfc::cli
