#pragma once

namespace confdet::cli {

/// Command-line front end. Subcommands: compute, verify, search, oracle.
/// Exit codes are a stable contract: 0 ok, 2 bad input, 3 degenerate
/// normalizer, 4 invariance failure, 5 conjecture violation.
int run(int argc, char** argv);

}  // namespace confdet::cli
