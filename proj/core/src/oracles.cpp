#include "besselquad/oracles.hpp"

#include "besselquad/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace besselquad {

namespace {

constexpr cplx iu{0.0, 1.0};

// sum_{j>=0} sign^j h^{e+2j} / ((off+j)! Gamma(b+j)).
//
// When b is a nonpositive integer the leading terms vanish and the sum starts
// at j0 = 1 - b; the power h^{e+2 j0} is then taken once, so an integer total
// exponent never meets a branch point.
SeriesValue bessel_type_series(cplx h, double sign, cplx e, cplx b, unsigned off, double tol) {
    const SeriesPolicy policy{tol, 1e-300, 3, 512};
    unsigned j0 = 0;
    if (is_nonpositive_integer(b))
        j0 = static_cast<unsigned>(1 - *as_integer(b));

    cplx t = (j0 == 0) ? recip_gamma(b) : cplx{1.0};
    for (unsigned i = 1; i <= off + j0; ++i)
        t /= static_cast<double>(i);
    if (j0 % 2 == 1 && sign < 0)
        t = -t;

    const cplx x = sign * h * h;
    cplx sum = 0.0;
    SeriesDiagnostics diag;
    int quiet = 0;
    std::size_t j = j0;
    for (std::size_t used = 0;; ++used) {
        if (used >= policy.max_terms)
            throw ConvergenceError("series_j: term cap reached");
        sum += t;
        diag.max_term_mag = std::max(diag.max_term_mag, std::abs(t));
        diag.terms_used = used + 1;
        const cplx next_den = static_cast<double>(off + j + 1) * (b + static_cast<double>(j));
        const bool tail = (b + static_cast<double>(j)).real() > 0.0 && std::abs(x) <= 0.5 * std::abs(next_den);
        if (tail && std::abs(t) <= policy.rel_tol * std::abs(sum) + policy.abs_floor) {
            if (++quiet >= policy.consecutive)
                break;
        } else {
            quiet = 0;
        }
        t *= x / next_den;
        ++j;
    }

    const cplx exponent = e + 2.0 * static_cast<double>(j0);
    cplx pref;
    if (const auto n = as_integer(exponent))
        pref = int_pow(h, *n);
    else
        pref = principal_pow(h, exponent);

    SeriesValue out{pref * sum, diag};
    out.diag.max_term_mag *= std::abs(pref);
    const double mag = std::abs(out.value);
    if (mag > 0.0)
        out.diag.cancellation_digits = std::log10(out.diag.max_term_mag / mag);
    else if (out.diag.max_term_mag > 0.0)
        out.diag.cancellation_digits = 17.0;
    return out;
}

} // namespace

QuadratureSpec oracle_quadrature_spec() {
    QuadratureSpec spec;
    spec.n_start = 32;
    spec.n_max = std::size_t{1} << 16;
    spec.rtol = 1e-14;
    spec.atol = 1e-300;
    return spec;
}

SeriesValue series_j(cplx mu, cplx z, double tol) {
    return bessel_type_series(z / 2.0, -1.0, mu, mu + 1.0, 0, tol);
}

cplx series_j_shifted(cplx mu, unsigned n, cplx z, double tol) {
    const cplx v = bessel_type_series(z / 2.0, -1.0, mu + static_cast<double>(n), mu + 1.0, n, tol).value;
    return (n % 2 == 1) ? -v : v;
}

SeriesValue series_i(cplx mu, cplx z, double tol) {
    return bessel_type_series(z / 2.0, 1.0, mu, mu + 1.0, 0, tol);
}

cplx bessel_integral_oracle(long m, cplx z, const QuadratureSpec& spec) {
    const double order = static_cast<double>(m);
    const auto f = [&](cplx t) { return std::exp(iu * z * std::cos(t)) * std::cos(order * t); };
    const QuadratureResult r = segment_quad(f, 0.0, pi, spec);
    return int_pow(-iu, m) * r.value / pi;
}

cplx bessel_integral_oracle(cplx mu, cplx z, const QuadratureSpec& spec) {
    const auto m = as_integer(mu);
    if (!m)
        throw DomainError("bessel_integral_oracle: order must be an integer");
    return bessel_integral_oracle(*m, z, spec);
}

cplx poisson_integral_oracle(cplx mu, cplx z, const QuadratureSpec& spec) {
    if (!(mu.real() > -0.5))
        throw DomainError("poisson_integral_oracle: need Re mu > -1/2");
    // Folding t -> pi - t onto [0, pi/2] puts both singular ends at u = 0.
    const cplx two_mu = 2.0 * mu;
    const auto f = [&](cplx u) {
        return 2.0 * std::cos(z * std::cos(u.real())) * principal_pow(std::sin(u.real()), two_mu);
    };
    const QuadratureResult r = segment_quad(f, 0.0, pi / 2.0, spec);
    return principal_pow(z / 2.0, mu) * recip_gamma(mu + 0.5) / std::sqrt(pi) * r.value;
}

cplx gamma_lower_direct(cplx mu, cplx w, const QuadratureSpec& spec) {
    if (!(mu.real() > 0.0))
        throw DomainError("gamma_lower_direct: need Re mu > 0");
    const cplx a = mu - 1.0;
    const auto f = [&](cplx t) { return std::exp(-t) * principal_pow(t, a); };
    return segment_quad(f, 0.0, w, spec).value;
}

cplx deriv_binomial_oracle(cplx mu, unsigned k, cplx z) {
    cplx sum = 0.0;
    double binom = 1.0;
    for (unsigned m = 0; m <= k; ++m) {
        const cplx term = binom * series_j(mu - static_cast<double>(k) + 2.0 * m, z).value;
        sum += (m % 2 == 0) ? term : -term;
        binom = binom * (k - m) / (m + 1);
    }
    return sum * std::ldexp(1.0, -static_cast<int>(k));
}

IdentityReport vanishing_moment_check(cplx mu, cplx z, unsigned n, const QuadratureSpec& spec) {
    (void)mu;
    if (n == 0)
        throw DomainError("vanishing_moment_check: need n >= 1");
    IdentityReport rep;
    rep.identity_id = "vanishing_moments";
    const double scale = std::exp(std::abs(z) / 2.0);
    rep.tolerance = 1e-10;
    for (unsigned k = 0; k < n; ++k) {
        const double freq = static_cast<double>(k) - static_cast<double>(n);
        const auto f = [&](double t) {
            return std::exp(-0.5 * z * std::exp(-iu * t)) * std::exp(iu * (freq * t));
        };
        const double mag = std::abs(periodic_trapezoid(f, spec).value);
        rep.max_abs_err = std::max(rep.max_abs_err, mag);
        ++rep.samples;
    }
    rep.max_rel_err = rep.max_abs_err / scale;
    rep.pass = rep.max_rel_err <= rep.tolerance;
    return rep;
}

IdentityReport beta_moment_identity(cplx nu, unsigned k, unsigned ell, const QuadratureSpec& spec) {
    if (!(nu.real() > -0.5))
        throw DomainError("beta_moment_identity: need Re nu > -1/2");
    const double kd = k, ld = ell;
    // u = pi/2 - t moves the algebraic end from t = pi/2 to u = 0.
    const cplx power = 2.0 * (nu + kd);
    const cplx freq = 2.0 * (ld + nu);
    const auto f = [&](cplx u) {
        const double x = u.real();
        return principal_pow(std::sin(x), power) * std::cos(freq * (pi / 2.0 - x));
    };
    const QuadratureResult r = segment_quad(f, 0.0, pi / 2.0, spec);
    const cplx left = principal_pow(2.0, nu + kd + 2.0) * r.value;

    IdentityReport rep;
    rep.identity_id = "beta_moments";
    rep.samples = 1;
    if (k >= ell) {
        const cplx right = principal_pow(2.0, 1.0 - nu - kd) * pi /
                           ((2.0 * nu + 2.0 * kd + 1.0) * beta_fn(2.0 * nu + kd + ld + 1.0, kd - ld + 1.0));
        rep.max_abs_err = std::abs(left - right);
        rep.max_rel_err = rep.max_abs_err / std::abs(right);
        rep.tolerance = 1e-6;
        rep.pass = rep.max_rel_err <= rep.tolerance;
    } else {
        rep.max_abs_err = std::abs(left);
        rep.max_rel_err = rep.max_abs_err;
        rep.tolerance = 1e-8;
        rep.pass = rep.max_abs_err <= rep.tolerance;
    }
    return rep;
}

} // namespace besselquad
