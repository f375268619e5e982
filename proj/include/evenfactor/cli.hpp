#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evenfactor {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitCap = 4,
};

/// Runs one command line (program name excluded). Errors go to `err` as a
/// single "error: <kind>: <message>" line.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace evenfactor
