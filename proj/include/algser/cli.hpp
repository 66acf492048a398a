#pragma once

#include <ostream>

namespace algser {

enum ExitCode : int {
  kExitOk = 0,
  kExitDefect = 1,
  kExitUsage = 2,
  kExitEmpty = 3,
  kExitVerification = 4,
  kExitCap = 5,
};

/// Entry point of the `algser` tool. Everything is written to `out` and
/// `err`; artifacts go only to paths named by --out and --dot.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace algser
