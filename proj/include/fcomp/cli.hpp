#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fcomp::cli {

// Exit statuses: 0/1/2 = Complete/Incomplete/Inconclusive; 64 usage error,
// 65 malformed input data, 66 missing input file, 70 internal error.
inline constexpr int exit_complete = 0;
inline constexpr int exit_incomplete = 1;
inline constexpr int exit_inconclusive = 2;
inline constexpr int exit_usage = 64;
inline constexpr int exit_data = 65;
inline constexpr int exit_noinput = 66;
inline constexpr int exit_internal = 70;

/// Runs the tool on argv-style arguments (excluding the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fcomp::cli
