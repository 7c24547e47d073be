#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sphex {
namespace cli {

// Exit codes: 0 success, 1 usage error, 2 verification failure.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace cli
} // namespace sphex
