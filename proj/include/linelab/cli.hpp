#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linelab {

// Full command-line surface. args excludes the program name. Returns the
// process exit code: 0 = success (refusals included), 1 = usage or
// operational error, 2 = a checked conjecture failed on the input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// argv wrapper over std::cout / std::cerr.
int run_cli(int argc, const char* const* argv);

}  // namespace linelab
