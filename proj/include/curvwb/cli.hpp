#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvwb {

/// Command-line entry point; argv without the program name. Returns the
/// process exit code: 0 all run checks pass, 1 at least one error-severity
/// diagnostic in the run's scope, 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvwb
