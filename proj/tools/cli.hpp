#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gha::cli {

/// Runs the command line `args` (program name excluded).
/// Returns 0 on success, 1 on numerical or regression failure, 2 on usage errors.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gha::cli
