#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace tmwit::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kUsage = 2,
  kViolation = 3,
};

// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Maps a failure to its exit code and writes the message to err. Exceptions
// outside the known families are rethrown.
int exit_code_for(std::exception_ptr error, std::ostream& err);

}  // namespace tmwit::cli
