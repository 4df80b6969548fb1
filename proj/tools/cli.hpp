#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mostar::cli {

/// Runs the command line `args` (args[0] is the program name). Returns the
/// process exit code: 0 on success (refuted claims included), 1 when every
/// compute input failed, 2 on usage or operational errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mostar::cli
