#ifndef BESSELQUAD_BESSEL_HPP
#define BESSELQUAD_BESSEL_HPP

#include "besselquad/gamma_star.hpp"
#include "besselquad/numerics.hpp"
#include "besselquad/quadrature.hpp"

#include <string_view>
#include <vector>

namespace besselquad {

enum class Warning {
    BranchCutProximity, ///< z on or next to the negative real axis, non-integer power
    SlowConvergence,    ///< quadrature budget exhausted before the tolerance was met
    CancellationLoss,   ///< series or quadrature cancellation limits the accuracy
};

std::string_view to_string(Warning w) noexcept;

struct EvalOutput {
    cplx value;
    double err_est = 0.0;
    std::size_t nodes_used = 0;
    /// Worst case over all quadrature nodes.
    SeriesDiagnostics series_diag;
    std::vector<Warning> warnings;

    bool has(Warning w) const noexcept;
};

/// Arguments of one evaluation: order mu, argument z, derivative order k
/// (Re k > -1) and integer order shift / Fourier index n.
struct OrderArg {
    cplx mu;
    cplx z;
    cplx k = 0.0;
    long n = 0;
};

enum class Function { J, I, JDeriv, Kappa };
enum class Representation { CosKernel, SinKernel, Kummer, Auto };

std::string_view to_string(Function f) noexcept;
std::string_view to_string(Representation r) noexcept;

// ---------------------------------------------------------------------------
// J_mu(z) and relatives through theta-integrals over [-pi, pi) whose kernels
// contain Tricomi's gamma*(mu, w). Every function accepts arbitrary complex
// mu and z; powers (z/2)^a take the principal branch, arg in (-pi, pi].
// For non-integer exponents a point on the negative real axis is evaluated on
// the arg = pi side and flagged with BranchCutProximity.
// ---------------------------------------------------------------------------

/// J_mu(z) = (1/2pi) (z/2)^mu int e^{iz cos t} gamma*(mu, i z e^{it}/2) dt.
///
/// At z = 0 the value comes from the series limit: 1 for mu = 0, 0 for
/// Re mu > 0 or negative integer mu, BranchError otherwise.
EvalOutput bessel_j(cplx mu, cplx z, const QuadratureSpec& spec = {});

/// Same function through the sine kernel
/// (1/2pi) (z/2)^mu int e^{iz sin t} gamma*(mu, z e^{it}/2) dt.
EvalOutput bessel_j_sin_kernel(cplx mu, cplx z, const QuadratureSpec& spec = {});

/// J_{mu+n}(z) for n >= 0 from the sine kernel of order mu weighted by
/// e^{-int}; the prefactor stays (z/2)^mu. n = 0 is bessel_j_sin_kernel.
EvalOutput bessel_j_shifted(cplx mu, unsigned n, cplx z, const QuadratureSpec& spec = {});

/// Fourier coefficient int kappa(t) e^{int} dt of the sine kernel
/// kappa(t) = e^{iz sin t} gamma*(mu, z e^{it}/2), any integer n.
/// No prefactor is applied, so z = 0 needs no special handling.
EvalOutput kappa_fourier_coeff(long n, cplx mu, cplx z, const QuadratureSpec& spec = {});

/// I_mu(z) = (1/2pi) (z/2)^mu int e^{z cos t} gamma*(mu, z e^{it}/2) dt.
EvalOutput bessel_i(cplx mu, cplx z, const QuadratureSpec& spec = {});

/// d^k/dz^k J_mu(z) for complex k with Re k > -1:
/// (1/2pi) (z/2)^{mu-k} int e^{iz sin t} gamma*(mu-k, z e^{it}/2) (i sin t)^k e^{-ikt} dt.
///
/// k = 0 returns bessel_j_sin_kernel. For non-integer k the kernel has
/// algebraic endpoints at sin t = 0, convergence is only algebraic, the
/// node budget is raised 4x and a SlowConvergence warning is expected.
/// DomainError when Re k <= -1.
EvalOutput bessel_j_deriv(cplx mu, cplx k, cplx z, const QuadratureSpec& spec = {});

/// J_mu(z) with the Kummer kernel
/// (z/2)^mu / (2pi Gamma(1+mu)) int e^{iz e^{-it}/2} M(1, 1+mu; i z e^{it}/2) dt.
/// PoleError when 1+mu is a nonpositive integer.
EvalOutput bessel_j_kummer(cplx mu, cplx z, const QuadratureSpec& spec = {});

/// I_mu(z) with the Kummer kernel e^{z e^{-it}/2} M(1, 1+mu; z e^{it}/2).
EvalOutput bessel_i_kummer(cplx mu, cplx z, const QuadratureSpec& spec = {});

/// d^k/dz^k J_mu(z) with the Kummer kernel
/// e^{-z e^{-it}/2} M(1, 1+mu-k; z e^{it}/2) (i sin t)^k e^{-ikt}.
EvalOutput bessel_j_deriv_kummer(cplx mu, cplx k, cplx z, const QuadratureSpec& spec = {});

/// Dispatch by function and representation. Auto selects the cosine kernel
/// for J and I, and the sine kernel for JDeriv and Kappa (the only kernels
/// those have). For J a non-zero arg.n evaluates J_{mu+n}; with the sine
/// kernel this is bessel_j_shifted. Unsupported pairs throw DomainError.
EvalOutput evaluate(Function f, Representation r, const OrderArg& arg, const QuadratureSpec& spec = {});

/// The same integral as `evaluate` on one fixed N-node grid, without
/// adaptivity: value = S_N and err_est = |S_N - S_{N/2}|. N must be a power
/// of two, at least 8.
EvalOutput evaluate_fixed_nodes(Function f, Representation r, const OrderArg& arg, std::size_t n_nodes);

} // namespace besselquad

#endif // BESSELQUAD_BESSEL_HPP
