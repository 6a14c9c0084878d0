#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace telinv {

// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitSingular = 2,
    kExitBadInput = 3,
    kExitUnsupported = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace telinv
