#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smadl::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kDiagnostics = 1,  // errors in the input, or fmt --checkonly drift
  kUsage = 2,        // bad arguments or unreadable/unwritable files
};

/// Runs one `smadl` invocation. `args` excludes the program name.
/// Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smadl::cli
