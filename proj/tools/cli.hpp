#pragma once

#include <ostream>

namespace rpart::cli {

// Exit codes: 0 success, 1 a checked identity failed where it must hold,
// 2 bad arguments.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitBadArguments = 2;

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace rpart::cli
