#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ubpcli {

/// Parses and dispatches one invocation. Returns the process exit status:
/// 0 success, 1 internal assertion failure, 2 argument errors.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace ubpcli
