#pragma once

#include <ostream>
#include <string>

namespace ubp {

enum class VerifyLevel { fast, full };

/// Runs the invariant suites at the indicated scale, printing one line per
/// check. Returns true when every check passes.
bool run_verify(VerifyLevel level, std::ostream& out);

} // namespace ubp
