#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liesym {

/// Runs the command line interface on the given arguments (program name
/// excluded) and streams. Returns the process exit code: 0 on success, 1
/// when a verification or reproduction check fails, 2 on usage errors or
/// unsupported requests, 3 on internal failures.
///
/// The output is a pure function of the arguments; repeated calls with
/// the same arguments produce identical bytes. Setting the environment
/// variable LIESYM_VERBOSE adds progress lines on the error stream.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liesym
