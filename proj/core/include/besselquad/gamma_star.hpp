#ifndef BESSELQUAD_GAMMA_STAR_HPP
#define BESSELQUAD_GAMMA_STAR_HPP

#include "besselquad/numerics.hpp"

#include <cstddef>

namespace besselquad {

/// Conditioning record of one power-series evaluation.
struct SeriesDiagnostics {
    std::size_t terms_used = 0;
    double max_term_mag = 0.0;
    /// log10(max_term_mag / |result|); negative when terms reinforce.
    double cancellation_digits = 0.0;
    bool converged = true;

    /// Worst case of two records, used when one evaluation spans many series.
    void merge(const SeriesDiagnostics& other) noexcept;
};

/// Stopping rule shared by every series in the library: a term counts as
/// negligible when |term| <= rel_tol*|partial sum| + abs_floor, and the sum
/// stops after `consecutive` negligible terms taken from the decaying tail.
struct SeriesPolicy {
    double rel_tol = 1e-16;
    double abs_floor = 1e-300;
    int consecutive = 3;
    std::size_t max_terms = 512;
};

struct SeriesValue {
    cplx value;
    SeriesDiagnostics diag;
};

/// Tricomi's entire incomplete gamma function gamma*(mu, w).
///
/// For Re w >= 0 the sum e^{-w} sum_k w^k / Gamma(mu+k+1) is used, with the
/// reciprocal gamma advanced by 1/Gamma(s+1) = (1/Gamma(s))/s. For Re w < 0
/// the equivalent entire series sum_k (mu)_k (-w)^k / (k! Gamma(mu+k+1)) is
/// used instead, which avoids the e^{-w} blow-up. Both are free of poles in
/// mu. Throws ConvergenceError when the policy's term cap is reached.
SeriesValue gamma_star(cplx mu, cplx w, const SeriesPolicy& policy = {});

/// Only the first (reciprocal-gamma) series, whatever the sign of Re w.
SeriesValue gamma_star_reciprocal_series(cplx mu, cplx w, const SeriesPolicy& policy = {});

/// Normalised lower incomplete gamma P(mu, w) = w^mu gamma*(mu, w).
cplx lower_p(cplx mu, cplx w);

/// gamma(mu, w) = Gamma(mu) w^mu gamma*(mu, w). PoleError at mu = 0, -1, ...
cplx gamma_lower(cplx mu, cplx w);

/// Gamma(mu, w) = Gamma(mu) (1 - w^mu gamma*(mu, w)).
cplx gamma_upper(cplx mu, cplx w);

/// gamma*(mu+n, w) from base = gamma*(mu, w) by the upward order recurrence.
/// Throws DegenerateInput for w == 0 with n >= 1.
cplx gamma_star_shift(cplx mu, unsigned n, cplx w, cplx base);

/// Kummer's M(1, 1+mu; w) by its Pochhammer series for Re w >= 0 and by
/// Kummer's transformation e^w M(mu, 1+mu; -w) for Re w < 0.
/// PoleError when 1+mu is a nonpositive integer.
SeriesValue kummer_m1(cplx mu, cplx w, const SeriesPolicy& policy = {});

} // namespace besselquad

#endif // BESSELQUAD_GAMMA_STAR_HPP
