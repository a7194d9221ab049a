#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hgemb::cli {

// Runs one command line (args excludes the program name). Returns 0 on
// success, 1 on a domain error (invalid embedding, infeasible input, guard
// tripped) and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgemb::cli
