#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fovisc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitNoConvergence = 4;

/// Runs one `fovisc` invocation. `args` excludes the program name. Results go
/// to `out` unless -o names a file; diagnostics and usage go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace fovisc::cli
