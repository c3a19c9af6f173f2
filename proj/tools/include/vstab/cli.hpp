#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vstab::cli {

/// Exit codes: 0 success, 1 domain/validation/precondition/internal, 2 parse.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitParse = 2;

/// Runs one command. `args` excludes the program name. Element arguments are
/// file paths ("-" reads `in`), optionally suffixed ^k for a power.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace vstab::cli
