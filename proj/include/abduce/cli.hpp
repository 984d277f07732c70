#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abduce {

/// Command dispatch for the `abduce` tool. Exit codes: 0 = report
/// produced, 1 = input unsatisfiable, 2 = error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace abduce
