#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace rank2::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kBadArguments = 1,
    kCapBreach = 2,
    kMismatch = 3,
    kInternal = 4,
};

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rank2::cli
