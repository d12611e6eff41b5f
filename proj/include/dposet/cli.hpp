#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dposet::cli {

// args excludes the program name. Returns 0 on success, 1 when a check or
// rank test fails, 2 on usage and parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dposet::cli
