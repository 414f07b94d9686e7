#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csig {

/// Runs one CLI invocation; args excludes the program name. Returns the exit code:
/// 0 ok, 1 internal error, 2 malformed input, 3 precondition violation.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Embedded invariant suite; one line per check. Returns true when all pass.
bool selftest(std::ostream& out);

}  // namespace csig
