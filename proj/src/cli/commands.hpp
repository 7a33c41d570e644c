#pragma once

#include <iosfwd>

namespace cauchy::cli {

/// Entry point shared by the executable and the tests. Returns the process
/// exit status: 0 success, 1 numeric failure, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cauchy::cli
