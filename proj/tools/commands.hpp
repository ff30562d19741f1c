#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace litcalc {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kMalformedInput = 2 };

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace litcalc
