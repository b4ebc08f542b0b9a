#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linopt::cli {

// Parses `args` (without the program name), dispatches to the library and
// writes the serialized payload to `out`. Returns the process exit status:
// 0 on success, 1 on domain errors (with a machine-readable {"error", ...}
// object in JSON format), 2 on usage errors (message on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace linopt::cli
