#pragma once

#include <ostream>

namespace wtau::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal inconsistency.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace wtau::cli
