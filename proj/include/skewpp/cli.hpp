#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewpp {

// Runs one command line (program name excluded) against the given streams.
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
// 3 internal failure (e.g. arithmetic overflow).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace skewpp
