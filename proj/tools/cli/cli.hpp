#ifndef BESSELQUAD_TOOLS_CLI_HPP
#define BESSELQUAD_TOOLS_CLI_HPP

#include "besselquad/numerics.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace besselquad::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_warnings = 2;
inline constexpr int exit_usage = 64;

/// Parses `RE`, `RE+IMi`, `RE-IMi`, `IMi`, `i` and `-i`; each number in
/// strtod syntax. Non-finite parts are rejected.
std::optional<cplx> parse_complex(std::string_view text);

/// `%.17g`, or `null` for a non-finite value.
std::string format_number(double x);

/// Runs the command line `argv` (argv[0] is the program name) and returns
/// the exit code. `env_nmax` stands in for the BESSELQUAD_NMAX variable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const char* env_nmax = nullptr);

} // namespace besselquad::cli

#endif // BESSELQUAD_TOOLS_CLI_HPP
