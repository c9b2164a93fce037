#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphcode {

// Entry point shared by the binary and the tests. Exit codes: 0 success,
// 1 domain error, 2 usage error (bad flags, unreadable or malformed input).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace graphcode
