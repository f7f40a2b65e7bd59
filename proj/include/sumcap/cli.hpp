// Command-line front end. Exit codes: 0 pass/success, 1 identity check
// failed, 2 invalid input.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sumcap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumcap
