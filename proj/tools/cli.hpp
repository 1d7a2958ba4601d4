#pragma once

#include <iosfwd>

namespace mcmgr::cli {

enum ExitCode : int { ok = 0, internal = 1, input = 2, exhaustion = 3, verification = 4 };

/// Runs one command line; everything goes to out and err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcmgr::cli
