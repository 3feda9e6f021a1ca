#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smlab::cli {

// Exit codes of every command.
enum ExitCode { kSuccess = 0, kAssertionFailure = 1, kUsageError = 2 };

// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smlab::cli
