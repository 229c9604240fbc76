#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fsr {

// Exit codes of the fsr command.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitInput = 2,
    kExitPrecondition = 3,
    kExitDisagreement = 4,
};

// Runs the command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fsr
