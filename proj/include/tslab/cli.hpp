#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tslab::cli {

/// Runs one command-line invocation. `args` excludes the program name.
/// Tables go to `out`, diagnostics to `err`. Returns the process exit code:
/// 0 on success, 1 on an analysis error, 2 on a usage error. Nothing is
/// written to `out` when the return code is nonzero.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tslab::cli
