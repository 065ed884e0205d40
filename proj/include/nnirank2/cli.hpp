#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nnirank2 {

/// Exit codes: 0 factorable at rank <= 2, 1 not rank 2, 2 usage or input error.
inline constexpr int exit_factorable = 0;
inline constexpr int exit_not_rank2 = 1;
inline constexpr int exit_input_error = 2;

/// Runs the command line without the program name, e.g. {"factor", "a.txt"}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nnirank2
