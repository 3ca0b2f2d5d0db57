#pragma once

#include <iosfwd>

namespace rsurf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;

/// Entry point of the rsurf command-line tool. Results go to `out`,
/// diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rsurf
