#pragma once

#include <ostream>

namespace pcpeq::cli {

// Exit statuses. Failed checks (check, oracle) exit with 1.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_precondition = 3;
inline constexpr int exit_internal = 4;

/// Entry point of the `pcpeq` tool, separated from main() for testing.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pcpeq::cli
