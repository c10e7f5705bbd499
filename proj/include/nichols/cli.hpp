#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nichols {

// Process exit codes of the command-line tool.
constexpr int kExitOk = 0;            // success, or dim scan terminated
constexpr int kExitUsage = 2;         // bad flags, literals, or word syntax
constexpr int kExitVerifyFail = 3;    // verify found a non-advisory failure
constexpr int kExitCapExceeded = 4;   // a search or degree cap was exceeded

// Runs one invocation (argv without the program name) against the given
// streams and returns the exit code.  The binary entry point and the test
// suite both go through here.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nichols
