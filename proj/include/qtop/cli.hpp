#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtop::cli {

/// Exit statuses of the command-line front end.
enum Status : int { kOk = 0, kInputError = 1, kVerificationFailed = 2 };

/// Runs one command; results and machine-readable errors go to `out`,
/// usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtop::cli
