#pragma once

#include <ostream>

namespace iip::cli {

// Exit codes: 0 success, 1 mathematical mismatch or falsification, 2 usage or
// parse error.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace iip::cli
