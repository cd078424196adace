#pragma once

#include <ostream>

namespace univjac::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kVerification = 3 };

/// Full command-line front end; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace univjac::cli
