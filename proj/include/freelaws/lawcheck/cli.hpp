#pragma once

#include <iosfwd>

namespace freelaws::lawcheck {

inline constexpr int kExitPass = 0;
inline constexpr int kExitLawFailure = 1;
inline constexpr int kExitUsage = 2;

/// lawcheck --effect E --suite S [bounds...] [--tsv path]
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace freelaws::lawcheck
