#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace virmod::cli {

/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or contract error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace virmod::cli
