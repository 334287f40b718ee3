#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace poset_assoc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Results go to `out`
/// (JSON by default, CSV with --format csv); errors go to `err` as a single
/// JSON line {"error": ..., "message": ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poset_assoc::cli
