#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eoplab {

/// Runs one command-line invocation; args exclude the program name.
///
/// Exit codes: 0 on success, 1 when a verification fails (a machine-readable
/// JSON failure report is written to the output stream) or on an internal
/// error, 2 on usage or configuration errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace eoplab
