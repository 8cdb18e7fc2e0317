#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcakit {

/// Exit status contract of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // bad flags, unreadable or malformed input, analysis errors
  kExitInadequate = 2,  // KMO or Bartlett gate failed; diagnostics still printed
};

/// Runs the command line with `args` (program name excluded). The report goes
/// to `out`; errors, prefixed with the failing stage, go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcakit
