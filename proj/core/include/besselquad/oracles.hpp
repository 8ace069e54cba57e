#ifndef BESSELQUAD_ORACLES_HPP
#define BESSELQUAD_ORACLES_HPP

// Independent reference computations: power series, the classical Bessel
// and Poisson integrals, the Euler integral for the lower incomplete gamma
// function, the binomial derivative formula and two families of exact
// integrals (vanishing Fourier moments, beta-function moments). None of
// these go through gamma*(mu, w) or the theta-kernels of bessel.hpp.

#include "besselquad/gamma_star.hpp"
#include "besselquad/numerics.hpp"
#include "besselquad/quadrature.hpp"

#include <string>

namespace besselquad {

struct IdentityReport {
    std::string identity_id;
    double max_rel_err = 0.0;
    double max_abs_err = 0.0;
    std::size_t samples = 0;
    bool pass = false;
    /// Registered tolerance the errors were judged against.
    double tolerance = 0.0;
    /// Free-form note on the worst sample or on a failure.
    std::string detail;
};

/// Quadrature policy used by the integral oracles: finer budget and a
/// tighter tolerance than the library default.
QuadratureSpec oracle_quadrature_spec();

/// J_mu(z) = sum_k (-1)^k (z/2)^{2k+mu} / (k! Gamma(mu+k+1)).
/// Integer orders use integer powers, so z = 0 is fine for them.
SeriesValue series_j(cplx mu, cplx z, double tol = 1e-16);

/// The tail sum_{k>=n} (-1)^k (z/2)^{2k+mu-n} / (k! Gamma(mu-n+k+1)).
cplx series_j_shifted(cplx mu, unsigned n, cplx z, double tol = 1e-16);

/// I_mu(z) = sum_k (z/2)^{2k+mu} / (k! Gamma(mu+k+1)).
SeriesValue series_i(cplx mu, cplx z, double tol = 1e-16);

/// Bessel's integral ((-i)^m / pi) int_0^pi e^{iz cos t} cos(m t) dt,
/// integer order only.
cplx bessel_integral_oracle(long m, cplx z, const QuadratureSpec& spec = oracle_quadrature_spec());

/// Overload that checks the order: DomainError unless mu is an integer.
cplx bessel_integral_oracle(cplx mu, cplx z, const QuadratureSpec& spec = oracle_quadrature_spec());

/// Poisson's integral (z/2)^mu / (Gamma(mu+1/2) sqrt(pi)) int_0^pi e^{iz cos t} sin^{2mu} t dt.
/// DomainError unless Re mu > -1/2.
cplx poisson_integral_oracle(cplx mu, cplx z, const QuadratureSpec& spec = oracle_quadrature_spec());

/// gamma(mu, w) = int_0^w e^{-t} t^{mu-1} dt along the straight segment,
/// t^{mu-1} on the principal branch. DomainError unless Re mu > 0.
cplx gamma_lower_direct(cplx mu, cplx w, const QuadratureSpec& spec = oracle_quadrature_spec());

/// d^k/dz^k J_mu(z) = 2^{-k} sum_m (-1)^m C(k,m) J_{mu-k+2m}(z) with each
/// J from series_j.
cplx deriv_binomial_oracle(cplx mu, unsigned k, cplx z);

/// Checks that int_{-pi}^{pi} exp(-z e^{-it}/2) e^{i(k-n)t} dt vanishes for
/// k = 0..n-1. Passes when the largest magnitude is <= 1e-10 e^{|z|/2}.
/// `mu` only labels the report; the integrals do not depend on it.
IdentityReport vanishing_moment_check(cplx mu, cplx z, unsigned n,
                                      const QuadratureSpec& spec = oracle_quadrature_spec());

/// Compares 2^{nu+k+2} int_0^{pi/2} cos^{2(nu+k)} t cos(2(ell+nu) t) dt with
/// 2^{1-nu-k} pi / ((2nu+2k+1) B(2nu+k+ell+1, k-ell+1)) to 1e-6 relative
/// when k >= ell; for k < ell the integral must be below 1e-8 in magnitude.
/// DomainError unless Re nu > -1/2.
IdentityReport beta_moment_identity(cplx nu, unsigned k, unsigned ell,
                                    const QuadratureSpec& spec = oracle_quadrature_spec());

} // namespace besselquad

#endif // BESSELQUAD_ORACLES_HPP
