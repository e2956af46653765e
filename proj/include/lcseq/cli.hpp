#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lcseq {

// Exit statuses of the command-line front end.
enum ExitStatus : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDecodeFailure = 2,
  kExitGuardExceeded = 3,
  kExitVerifyFailed = 4,
};

// Runs `lcseq <args...>` (args excludes the program name), writing the report
// to `out` and diagnostics to `err`. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcseq
