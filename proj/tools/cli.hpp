#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace foldchi::cli {

// Exit codes: 0 computed, 1 computed a negative verdict (invalid input
// structure under `validate`, an obstruction, a failed certificate),
// 2 could not compute (usage, syntax, schema, or precondition errors).
inline constexpr int exit_ok = 0;
inline constexpr int exit_verdict = 1;
inline constexpr int exit_input_error = 2;

/// Runs one command. argv[0] is the program name. `in` backs input files
/// given as "-" (or omitted).
int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace foldchi::cli
