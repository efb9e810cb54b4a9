#pragma once

#include <iosfwd>

namespace persym::cli {

// Runs the `persym` command line. Returns the process exit status:
// 0 all checks pass, 1 mathematical mismatch, 2 usage or budget error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace persym::cli
