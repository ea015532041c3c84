#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace striphom {

// Command-line entry point; args excludes the program name.  JSON goes to
// out (or the --out file), diagnostics to err.  Returns 0 on success, 1 on
// a verification failure, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace striphom
