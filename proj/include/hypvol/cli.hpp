#ifndef HYPVOL_CLI_HPP_
#define HYPVOL_CLI_HPP_

#include <iosfwd>

namespace hypvol {

inline constexpr int kExitVerified = 0;
inline constexpr int kExitUndecided = 1;
inline constexpr int kExitPrecision = 2;
inline constexpr int kExitUsage = 64;

/// Command line entry point; argv[0] is the program name.
int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

} // namespace hypvol

#endif /* HYPVOL_CLI_HPP_ */
