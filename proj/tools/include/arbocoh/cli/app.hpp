#pragma once

#include <iosfwd>

namespace arbocoh::cli {

/// Exit codes: 0 success, 1 failed verification or runtime error, 2 invalid
/// descriptor, 3 unknown suite; argument errors use CLI11's codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arbocoh::cli
