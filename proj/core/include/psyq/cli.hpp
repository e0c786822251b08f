#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psyq {

/// Runs the `psyq` command line (args exclude the program name).
/// Exit codes: 0 success / all checks pass, 1 axiom or invariance
/// failure, 2 parse error, 3 domain or precondition error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace psyq
