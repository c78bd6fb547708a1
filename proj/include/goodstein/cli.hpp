#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace goodstein::cli {

/// Process exit codes. Every outcome maps to exactly one of these.
enum ExitCode : int {
    kOk = 0,
    kBadInput = 2,      ///< bad arguments, malformed trace, empty run
    kCapReached = 3,    ///< step or magnitude cap hit before zero
    kDescentFailed = 4, ///< descent violation or step mismatch
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace goodstein::cli
