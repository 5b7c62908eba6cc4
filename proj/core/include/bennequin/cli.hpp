#pragma once

#include <iosfwd>

namespace bennequin::cli {

// Full command-line entry point, stream-parameterized for in-process testing.
// Exit codes: 0 success, 1 verification/corpus violation, 2 usage/parse error.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace bennequin::cli
