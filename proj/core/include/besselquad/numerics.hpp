#ifndef BESSELQUAD_NUMERICS_HPP
#define BESSELQUAD_NUMERICS_HPP

#include <complex>
#include <optional>

namespace besselquad {

/// The universal value type: a complex number with binary64 components.
using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

inline bool is_finite(cplx z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// The integer value of `z` when it is an exact (real) integer that fits
/// comfortably in a long, otherwise empty.
std::optional<long> as_integer(cplx z) noexcept;

/// True for s in {0, -1, -2, ...}, compared exactly.
bool is_nonpositive_integer(cplx s) noexcept;

/// sin(pi*s) with exact zeros at the integers.
cplx sin_pi(cplx s) noexcept;

/// 1/Gamma(s). Entire; exactly zero at the nonpositive integers.
cplx recip_gamma(cplx s) noexcept;

/// Gamma(s) through the Lanczos sum for Re s >= 1/2 and reflection
/// otherwise. Throws PoleError at s = 0, -1, -2, ...
cplx gamma_fn(cplx s);

/// Euler beta function Gamma(a)Gamma(b)/Gamma(a+b). Throws PoleError when
/// any of a, b, a+b is a nonpositive integer.
cplx beta_fn(cplx a, cplx b);

/// Principal logarithm with arg in (-pi, pi]. A base on the negative real
/// axis maps to arg = pi regardless of the sign of its zero imaginary part.
/// Throws BranchError for a zero argument.
cplx principal_log(cplx z);

/// Principal argument in (-pi, pi] under the same convention as principal_log.
double principal_arg(cplx z) noexcept;

/// base^exponent = exp(exponent * Log base) on the principal branch.
///
/// Conventions at the branch point: exponent == 0 gives 1 (also for
/// base == 0); base == 0 with Re exponent > 0 gives 0; any other zero base
/// throws BranchError. Small integer exponents are evaluated by repeated
/// multiplication, which is single-valued.
cplx principal_pow(cplx base, cplx exponent);

/// z^n for integer n by binary powering; n < 0 requires z != 0.
cplx int_pow(cplx z, long n);

} // namespace besselquad

#endif // BESSELQUAD_NUMERICS_HPP
