#include "besselquad/numerics.hpp"

#include "besselquad/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace besselquad {

namespace {

#include "lanczos_coefficients.inc"

const double sqrt_two_pi = std::sqrt(2.0 * pi);

// x reduced to (-1, 1] modulo 2, exactly.
double reduce_mod2(double x) noexcept {
    double r = std::fmod(x, 2.0);
    if (r <= -1.0)
        r += 2.0;
    else if (r > 1.0)
        r -= 2.0;
    return r;
}

double sinpi_real(double x) noexcept {
    if (x == std::floor(x))
        return 0.0;
    const double r = reduce_mod2(x);
    if (r > 0.5)
        return std::sin(pi * (1.0 - r));
    if (r < -0.5)
        return std::sin(pi * (-1.0 - r));
    return std::sin(pi * r);
}

double cospi_real(double x) noexcept {
    if (x - std::floor(x) == 0.5)
        return 0.0;
    const double a = std::abs(reduce_mod2(x));
    return std::sin(pi * (0.5 - a));
}

// log Gamma(s) contributions for Re s >= 1/2: returns (log of the
// t^(s-1/2) e^(-t) factor, Lanczos partial-fraction sum).
struct LanczosParts {
    cplx log_power;
    cplx series;
};

LanczosParts lanczos_parts(cplx s) noexcept {
    const cplx z = s - 1.0;
    cplx series = lanczos_coefficients[0];
    for (std::size_t i = 1; i < lanczos_coefficients.size(); ++i)
        series += lanczos_coefficients[i] / (z + static_cast<double>(i));
    const cplx t = z + lanczos_g + 0.5;
    return {(z + 0.5) * std::log(t) - t, series};
}

cplx gamma_right_half(cplx s) noexcept {
    const auto [log_power, series] = lanczos_parts(s);
    return sqrt_two_pi * std::exp(log_power) * series;
}

cplx recip_gamma_right_half(cplx s) noexcept {
    const auto [log_power, series] = lanczos_parts(s);
    return std::exp(-log_power) / (sqrt_two_pi * series);
}

} // namespace

std::optional<long> as_integer(cplx z) noexcept {
    const double x = z.real();
    if (z.imag() != 0.0 || !std::isfinite(x) || x != std::floor(x) || std::abs(x) > 0x1p52)
        return std::nullopt;
    return static_cast<long>(x);
}

bool is_nonpositive_integer(cplx s) noexcept {
    const auto n = as_integer(s);
    return n && *n <= 0;
}

cplx sin_pi(cplx s) noexcept {
    const double x = s.real();
    const double y = s.imag();
    return {sinpi_real(x) * std::cosh(pi * y), cospi_real(x) * std::sinh(pi * y)};
}

cplx recip_gamma(cplx s) noexcept {
    if (is_nonpositive_integer(s))
        return 0.0;
    if (const auto n = as_integer(s); n && *n <= 171)
        return 1.0 / std::tgamma(static_cast<double>(*n));
    if (s.real() >= 0.5)
        return recip_gamma_right_half(s);
    // 1/Gamma(s) = sin(pi s) Gamma(1-s) / pi
    return sin_pi(s) * gamma_right_half(1.0 - s) / pi;
}

cplx gamma_fn(cplx s) {
    if (is_nonpositive_integer(s))
        throw PoleError("gamma_fn: pole at s = " + std::to_string(s.real()));
    if (const auto n = as_integer(s); n && *n <= 171)
        return std::tgamma(static_cast<double>(*n));
    if (s.real() >= 0.5)
        return gamma_right_half(s);
    return pi / (sin_pi(s) * gamma_right_half(1.0 - s));
}

cplx beta_fn(cplx a, cplx b) {
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b) || is_nonpositive_integer(a + b))
        throw PoleError("beta_fn: gamma pole in arguments");
    return gamma_fn(a) * gamma_fn(b) * recip_gamma(a + b);
}

double principal_arg(cplx z) noexcept {
    double arg;
    if (z.imag() == 0.0)
        arg = z.real() < 0.0 ? pi : 0.0;
    else
        arg = std::atan2(z.imag(), z.real());
#ifdef BESSELQUAD_SABOTAGE_BRANCH
    if (arg < 0.0)
        arg += 2.0 * pi;
#endif
    return arg;
}

cplx principal_log(cplx z) {
    if (z == 0.0)
        throw BranchError("principal_log: logarithm of zero");
    return {std::log(std::abs(z)), principal_arg(z)};
}

cplx int_pow(cplx z, long n) {
    if (n < 0) {
        if (z == 0.0)
            throw BranchError("int_pow: negative power of zero");
        return 1.0 / int_pow(z, -n);
    }
    cplx result = 1.0;
    cplx base = z;
    for (unsigned long e = static_cast<unsigned long>(n); e != 0; e >>= 1) {
        if (e & 1u)
            result *= base;
        base *= base;
    }
    return result;
}

cplx principal_pow(cplx base, cplx exponent) {
    if (exponent == 0.0)
        return 1.0;
    if (base == 0.0) {
        if (exponent.real() > 0.0)
            return 0.0;
        throw BranchError("principal_pow: zero base with Re(exponent) <= 0");
    }
    if (const auto n = as_integer(exponent); n && std::abs(*n) <= 64)
        return int_pow(base, *n);
    return std::exp(exponent * principal_log(base));
}

} // namespace besselquad
