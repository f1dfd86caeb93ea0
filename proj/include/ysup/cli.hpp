#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ysup::cli {

/// Runs one CLI invocation. `args` excludes the program name. Returns 0 on
/// success, 1 on a domain error (bad circuit file, failed comparison) and 2 on
/// a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ysup::cli
