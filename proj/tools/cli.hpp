#pragma once

#include <iosfwd>

namespace orbvar::cli {

// Exit status: 0 success, 1 domain or verification failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbvar::cli
