#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secant::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

/// Runs one command line (without the program name). Reports go to `out` as
/// JSON; diagnostics and progress go to `err`. Tensor input that is not read
/// from a file comes from `in`.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace secant::cli
