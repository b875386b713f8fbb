#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bca::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFailure = 1;
inline constexpr int kInputError = 2;

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bca::cli
