#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wqo::cli {

/// Runs the `wqo` command line with `args` (program name excluded).
/// Returns 0 on success, 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wqo::cli
