#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lmflat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `lmflat` tool. args excludes the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace lmflat::cli
