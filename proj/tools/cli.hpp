#pragma once

#include <iosfwd>

namespace superko::cli {

enum Exit { kOk = 0, kVerificationFailure = 1, kUsage = 2 };

// Runs the superko command line; output goes to out (or --output), diagnostics
// to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superko::cli
