#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pnt::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when a check finds
/// violations, 2 on usage or input errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pnt::cli
