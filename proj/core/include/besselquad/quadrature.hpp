#ifndef BESSELQUAD_QUADRATURE_HPP
#define BESSELQUAD_QUADRATURE_HPP

#include "besselquad/numerics.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace besselquad {

/// Node budget and tolerance policy for the adaptive rules.
struct QuadratureSpec {
    std::size_t n_start = 32;
    std::size_t n_max = 8192;
    double rtol = 1e-12;
    double atol = 1e-300;

    /// Throws DomainError unless n_start >= 8, n_max >= n_start, both are
    /// powers of two and both tolerances are positive.
    void validate() const;
};

struct QuadratureResult {
    cplx value;
    double err_est = 0.0;
    std::size_t nodes_used = 0;
    bool converged = false;
    /// Acceptance came from the rounding floor of the sum rather than from
    /// rtol/atol (the integral is tiny compared with the integrand).
    bool roundoff_limited = false;
};

using PeriodicIntegrand = std::function<cplx(double)>;
using PathIntegrand = std::function<cplx(cplx)>;

/// Nodes of the N-point midpoint-offset periodic grid on [-pi, pi):
/// theta_j = -pi + 2 pi (j + 1/2) / N. None of them is -pi, 0 or pi.
std::vector<double> periodic_nodes(std::size_t n);

struct PeriodicSum {
    cplx value;          ///< (2 pi / N) sum_j f(theta_j)
    double abs_mass = 0; ///< (2 pi / N) sum_j |f(theta_j)|
};

/// Fixed-N rule; the sum is compensated and taken in ascending node order.
PeriodicSum periodic_sum(const PeriodicIntegrand& f, std::size_t n);

/// Integral of a smooth 2 pi-periodic function over [-pi, pi) by the
/// midpoint-offset rule with node doubling from spec.n_start up to
/// spec.n_max. The error estimate is the last doubling difference, a
/// heuristic rather than a bound. On budget exhaustion the finest sum is
/// returned with converged = false.
QuadratureResult periodic_trapezoid(const PeriodicIntegrand& f, const QuadratureSpec& spec = {});

/// Integral of f along the straight segment a -> b by composite
/// 20-point Gauss-Legendre panels. Panels are graded geometrically towards
/// `a`, so an integrable algebraic singularity belongs at that end. Each
/// refinement level doubles the uniform panel count and deepens the
/// grading; spec.n_max caps the node count of a level.
QuadratureResult segment_quad(const PathIntegrand& f, cplx a, cplx b, const QuadratureSpec& spec = {});

} // namespace besselquad

#endif // BESSELQUAD_QUADRATURE_HPP
