#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jumpform {

/// Dispatches one CLI invocation.  Exit codes: 0 ok, 1 operation error
/// (an error report is printed to `out` as JSON), 2 usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jumpform
