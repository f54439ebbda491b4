#pragma once

#include <atomic>
#include <ostream>
#include <string>
#include <vector>

namespace subgame {
struct SweepSummary;
}

namespace subgame::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDetectionFailure = 2,
  kMismatch = 3,
  kInterrupted = 130,
};

/// Exit status for a finished sweep: mismatch outranks detection failure.
int exit_status(const SweepSummary& summary);

/// Parses `args` (args[0] is the program name) and runs the selected
/// subcommand. Results go to `out`, diagnostics to `err`. `cancel`, when
/// set, stops a running verify/resume at the next record.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* cancel = nullptr);

}  // namespace subgame::cli
