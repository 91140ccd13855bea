#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmf {

// Command-line driver; returns the process exit code.
//   0  command completed and every asserted property holds
//   1  mathematical failure: failed verification, negative verdict,
//      non-transversal plane, no certificate within the caps
//   2  usage, file, or expression errors
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cmf
