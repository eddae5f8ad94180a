#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aknsmf {

/// Runs the command-line front end. Reports go to `out`, diagnostics to
/// `err`. Returns 0 when all checks pass, 1 when any check fails, 2 on
/// usage errors (including insufficient --order overrides).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aknsmf
