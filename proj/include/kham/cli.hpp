#pragma once

#include <iosfwd>

namespace kham {

enum ExitCode : int {
    kExitPass = 0,
    kExitFail = 1,
    kExitInvalid = 2,
    kExitGuard = 3,
};

/// Entry point of the kham tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kham
