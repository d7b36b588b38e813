#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coinweigh::cli {

// Exit-code contract shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,     // required claim failed, or oracle mismatch
  kBadInput = 2,   // bad flags or invalid position
  kTerminal = 3,   // `moves` on a position with no legal move
  kIoError = 4,
  kIntegrity = 5,  // cache disagrees with recomputation
};

/// Runs one command line (without the program name). Everything the
/// command prints goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coinweigh::cli
