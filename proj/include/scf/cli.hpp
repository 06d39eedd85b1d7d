#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scf::cli {

/// Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure.
int run(int argc, char** argv);
/// Same, with the program name excluded from args and explicit streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scf::cli
