#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcalab {

/// Runs the command line front end. Returns 0 when every check passes, 1
/// when any fails or is refused, 2 on malformed input or usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcalab
