#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace faultsim::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,   // bad flags or arguments
  kParse = 3,   // malformed input file
  kDomain = 4,  // input outside an operation's domain, unknown id, bad config
  kIo = 5,      // unreadable or unwritable path
};

/// Runs the `faultsim` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace faultsim::cli
