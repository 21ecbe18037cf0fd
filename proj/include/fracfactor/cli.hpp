#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracfactor::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    ok = 0,
    property_false = 1,  // check/factor answered "no", sharpness replay failed
    usage = 2,           // bad flags, unreadable or malformed input
    counterexample = 3,  // theorem/scan found an inconsistent report
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fracfactor::cli
