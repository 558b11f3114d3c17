#pragma once

#include <ostream>
#include <span>
#include <string>

namespace logitprice::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

// Runs one command. `args` excludes the program name. Results go to `out`
// (or the --out file), diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace logitprice::cli
