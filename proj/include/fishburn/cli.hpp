#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fishburn::cli {

// Exit codes: 0 success, 1 usage error, 2 computation error, 3 verify
// mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fishburn::cli
