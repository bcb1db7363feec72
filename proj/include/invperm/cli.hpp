#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invperm {

/// Command-line entry point. argv[0] is the program name. Returns 0 on
/// success, 1 when a verification or comparison finds a mismatch and 2 on
/// usage errors or unparsable input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invperm
