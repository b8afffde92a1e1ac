#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parahiggs::cli {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 internal error, 2 validation error, 3 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parahiggs::cli
