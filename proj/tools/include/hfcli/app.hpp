#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hfcli {

// Runs one command. Returns 0 on success, 1 on a domain error (an error
// object is written to `out`) and 2 on a usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hfcli
