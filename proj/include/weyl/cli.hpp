#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weyl::cli {

enum ExitCode { ok = 0, domain = 1, parse = 2, numeric = 3 };

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weyl::cli
