#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ifr::cli {

/// Process exit codes. Stable; scripts depend on them.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,       // bad flags or configuration
  kValidation = 3,  // malformed or inconsistent hierarchy/data, unknown lookup
  kIo = 4,          // unreadable input, unwritable output
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ifr::cli
