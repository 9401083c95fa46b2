#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gradings {

enum ExitCode : int { kExitPass = 0, kExitVerifyFail = 1, kExitBadSpec = 2, kExitParseError = 3 };

/// Runs one command line (without the program name). JSON results go to out
/// (or --out), error objects {"error", "message"} to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradings
