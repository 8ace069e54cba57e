#include "besselquad/gamma_star.hpp"

#include "besselquad/errors.hpp"
#include "besselquad/summation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace besselquad {

namespace {

// Sums t_{k0}, t_{k0+1}, ... where t_{k+1} = t_k * ratio(k). `in_tail(k)`
// reports whether the ratio has settled into monotone decay from index k on;
// only such terms may count towards the stopping rule.
template <class Ratio, class Tail>
SeriesValue sum_series(cplx first, std::size_t k0, Ratio ratio, Tail in_tail,
                       const SeriesPolicy& policy, const char* name) {
    ComplexNeumaierSum sum;
    SeriesDiagnostics diag;
    cplx term = first;
    int negligible = 0;
    for (std::size_t k = k0; k < k0 + policy.max_terms; ++k) {
        if (!is_finite(term))
            throw ConvergenceError(std::string(name) + ": series term overflowed");
        sum.add(term);
        ++diag.terms_used;
        const double mag = std::abs(term);
        diag.max_term_mag = std::max(diag.max_term_mag, mag);
        if (in_tail(k) && mag <= policy.rel_tol * std::abs(sum.value()) + policy.abs_floor) {
            if (++negligible >= policy.consecutive)
                return {sum.value(), diag};
        } else {
            negligible = 0;
        }
        term *= ratio(k);
    }
    throw ConvergenceError(std::string(name) + ": no convergence within " +
                           std::to_string(policy.max_terms) + " terms");
}

void finish_diagnostics(SeriesValue& s) {
    const double mag = std::abs(s.value);
    if (mag > 0.0)
        s.diag.cancellation_digits = std::log10(s.diag.max_term_mag / mag);
    else
        s.diag.cancellation_digits = s.diag.max_term_mag > 0.0 ? 17.0 : 0.0;
}

// e^{-w} sum_k w^k / Gamma(mu+k+1)
SeriesValue reciprocal_gamma_form(cplx mu, cplx w, const SeriesPolicy& policy) {
    std::size_t k0 = 0;
    cplx first;
    // For mu = -n the terms with k < n vanish identically and the recurrence
    // would divide 0 by 0 at k = n-1; start the sum at k = n instead.
    if (const auto n = as_integer(mu); n && *n < 0) {
        k0 = static_cast<std::size_t>(-*n);
        first = int_pow(w, -*n);
    } else {
        first = recip_gamma(mu + 1.0);
    }
    const double aw = std::abs(w);
    auto ratio = [&](std::size_t k) { return w / (mu + static_cast<double>(k + 1)); };
    auto tail = [&](std::size_t k) {
        const cplx d = mu + static_cast<double>(k + 1);
        return d.real() > 0.0 && aw <= 0.5 * std::abs(d);
    };
    SeriesValue s = sum_series(first, k0, ratio, tail, policy, "gamma_star");
    const cplx e = std::exp(-w);
    s.value *= e;
    s.diag.max_term_mag *= std::abs(e);
    finish_diagnostics(s);
    return s;
}

// sum_k (mu)_k (-w)^k / (k! Gamma(mu+k+1)), the pole-free normalisation of
// the series gamma(mu,w) = sum (-1)^k w^{mu+k} / (k! (mu+k)).
SeriesValue pochhammer_form(cplx mu, cplx w, const SeriesPolicy& policy) {
    // (-n)_k vanishes for k > n and 1/Gamma(k-n+1) for k < n: only w^n is left.
    if (const auto n = as_integer(mu); n && *n <= 0) {
        SeriesValue s{int_pow(w, -*n), {}};
        s.diag.terms_used = 1;
        s.diag.max_term_mag = std::abs(s.value);
        return s;
    }
    const cplx mw = -w;
    const double aw = std::abs(w);
    auto ratio = [&](std::size_t k) {
        const double kk = static_cast<double>(k);
        return (mu + kk) * mw / ((kk + 1.0) * (mu + kk + 1.0));
    };
    auto tail = [&](std::size_t k) {
        const double kk = static_cast<double>(k);
        return (mu.real() + kk) > 0.0 && aw <= 0.5 * (kk + 1.0);
    };
    SeriesValue s = sum_series(recip_gamma(mu + 1.0), 0, ratio, tail, policy, "gamma_star");
    finish_diagnostics(s);
    return s;
}

} // namespace

void SeriesDiagnostics::merge(const SeriesDiagnostics& other) noexcept {
    terms_used = std::max(terms_used, other.terms_used);
    max_term_mag = std::max(max_term_mag, other.max_term_mag);
    cancellation_digits = std::max(cancellation_digits, other.cancellation_digits);
    converged = converged && other.converged;
}

SeriesValue gamma_star_reciprocal_series(cplx mu, cplx w, const SeriesPolicy& policy) {
    return reciprocal_gamma_form(mu, w, policy);
}

SeriesValue gamma_star(cplx mu, cplx w, const SeriesPolicy& policy) {
    if (w.real() >= 0.0)
        return reciprocal_gamma_form(mu, w, policy);
    return pochhammer_form(mu, w, policy);
}

cplx lower_p(cplx mu, cplx w) {
    return principal_pow(w, mu) * gamma_star(mu, w).value;
}

cplx gamma_lower(cplx mu, cplx w) {
    if (is_nonpositive_integer(mu))
        throw PoleError("gamma_lower: Gamma(mu) has a pole at mu = " + std::to_string(mu.real()));
    return gamma_fn(mu) * lower_p(mu, w);
}

cplx gamma_upper(cplx mu, cplx w) {
    return gamma_fn(mu) * (1.0 - lower_p(mu, w));
}

cplx gamma_star_shift(cplx mu, unsigned n, cplx w, cplx base) {
    if (n == 0)
        return base;
    if (w == 0.0)
        throw DegenerateInput("gamma_star_shift: recurrence undefined at w = 0; evaluate gamma_star directly");
    ComplexNeumaierSum partial;
    cplx wk = 1.0;
    for (unsigned k = 0; k < n; ++k) {
        partial.add(wk * recip_gamma(mu + static_cast<double>(k + 1)));
        wk *= w;
    }
    return int_pow(w, -static_cast<long>(n)) * (base - std::exp(-w) * partial.value());
}

SeriesValue kummer_m1(cplx mu, cplx w, const SeriesPolicy& policy) {
    const cplx b = 1.0 + mu;
    if (is_nonpositive_integer(b))
        throw PoleError("kummer_m1: 1+mu is a nonpositive integer");
    const double aw = std::abs(w);
    SeriesValue s;
    if (w.real() >= 0.0) {
        auto ratio = [&](std::size_t k) { return w / (b + static_cast<double>(k)); };
        auto tail = [&](std::size_t k) {
            const cplx d = b + static_cast<double>(k);
            return d.real() > 0.0 && aw <= 0.5 * std::abs(d);
        };
        s = sum_series(cplx(1.0), 0, ratio, tail, policy, "kummer_m1");
    } else {
        // Kummer's transformation M(1, b; w) = e^w M(b-1, b; -w), whose terms
        // mu/(mu+k) (-w)^k/k! do not alternate in sign for Re w < 0.
        auto ratio = [&](std::size_t k) {
            const double kd = static_cast<double>(k);
            return (mu + kd) / (mu + kd + 1.0) * (-w / (kd + 1.0));
        };
        auto tail = [&](std::size_t k) {
            return (mu + static_cast<double>(k)).real() > 0.0 && aw <= 0.5 * static_cast<double>(k + 1);
        };
        s = sum_series(cplx(1.0), 0, ratio, tail, policy, "kummer_m1");
        const cplx e = std::exp(w);
        s.value *= e;
        s.diag.max_term_mag *= std::abs(e);
    }
    finish_diagnostics(s);
    return s;
}

} // namespace besselquad
