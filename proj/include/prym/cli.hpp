#pragma once

#include <iosfwd>

namespace prym {

// Parses argv and runs one subcommand, writing the artifact to `out` and
// diagnostics to `err`. Exit codes: 0 success, 1 usage error, 2 domain
// error, 3 resource-cap breach, 4 failed --expect check.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace prym
