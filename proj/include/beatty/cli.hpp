#ifndef BEATTY_CLI_HPP
#define BEATTY_CLI_HPP

#include <ostream>

namespace beatty {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;  // ran fine, answer is negative
inline constexpr int kExitUsage = 2;  // bad arguments or domain error

/// Entry point of the command-line tool. Reports go to out (or to --out
/// files), diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace beatty

#endif  // BEATTY_CLI_HPP
