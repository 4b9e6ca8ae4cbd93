#pragma once

// The mckay command line: info, surface, resolve, mckay, oracle and
// heuristic4d.

#include <ostream>
#include <string>
#include <vector>

namespace mckay {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,  ///< bad arguments or an unwritable output path
  kExitBadGroup = 2,
  kExitNotGorenstein = 3,
  kExitVerification = 4,
};

/// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mckay
