#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cantor::cli {

/// Exit statuses of `run`.
enum Status : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
