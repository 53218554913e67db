#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surcsp::cli {

// Exit codes: 0 success, 1 usage/parse error, 2 infeasible
// (NoSurjection/NoSolution), 3 brute-force cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surcsp::cli
