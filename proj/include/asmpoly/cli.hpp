#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asmpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1; ///< domain rejection or false predicate
inline constexpr int kExitUsage = 2;    ///< usage, parse or cap error

/// Runs one command. `args` excludes the program name. Files named "-" are
/// read from `in`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace asmpoly::cli
