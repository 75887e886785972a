#pragma once

#include <iosfwd>

namespace distcrypt {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitInputInvalid = 2,
  kExitProtocol = 3,
  kExitResourceCap = 4,
  kExitPartial = 5,
};

/// Entry point of the command-line tool; usable in-process from tests.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace distcrypt
