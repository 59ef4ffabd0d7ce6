// Command-line surface. Kept as a function of argument vector and streams so
// the test suite can drive it in-process.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chroma {

// Exit status: 0 success, 1 refusal or precondition failure (including bad
// usage and refuted verification), 2 input parse error.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace chroma
