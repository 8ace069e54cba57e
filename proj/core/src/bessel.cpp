#include "besselquad/bessel.hpp"

#include "besselquad/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>

namespace besselquad {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double branch_cut_band = 1e-8;
constexpr double cancellation_warn_digits = 3.0;
constexpr std::size_t fractional_budget_factor = 4;

using Kernel = std::function<cplx(double, SeriesDiagnostics&)>;

// One theta-integral together with the constant in front of it:
// value = scale * (z/2)^power * int kernel.
struct Plan {
    Kernel kernel;
    cplx z;
    cplx scale = 1.0;
    std::optional<cplx> power;
    std::optional<cplx> closed_form;
    std::size_t budget_factor = 1;
};

const cplx iu{0.0, 1.0};

cplx unit(double t) { return {std::cos(t), std::sin(t)}; }

// Limit of (z/2)^order * (entire function equal to 1/Gamma(order+1) at 0).
cplx zero_argument_limit(cplx order) {
    if (order == 0.0)
        return 1.0;
    if (order.real() > 0.0)
        return 0.0;
    if (const auto n = as_integer(order); n && *n < 0)
        return 0.0;
    throw BranchError("Bessel function at z = 0 with Re(order) <= 0 and non-integer order");
}

bool near_negative_axis(cplx z) {
    return z.real() < 0.0 && std::abs(z.imag()) <= branch_cut_band * std::abs(z);
}

cplx gs(cplx mu, cplx w, SeriesDiagnostics& d) {
    SeriesValue s = gamma_star(mu, w);
    d.merge(s.diag);
    return s.value;
}

cplx m1(cplx mu, cplx w, SeriesDiagnostics& d) {
    SeriesValue s = kummer_m1(mu, w);
    d.merge(s.diag);
    return s.value;
}

// (i sin t)^k e^{-ikt}, the derivative weight.
cplx derivative_weight(cplx k, double t) {
    return principal_pow(cplx(0.0, std::sin(t)), k) * std::exp(-iu * k * t);
}

void require_kummer_order(cplx b) {
    if (is_nonpositive_integer(b))
        throw PoleError("Kummer kernel: 1 + order is a nonpositive integer");
}

Plan j_cos_plan(cplx mu, cplx z) {
    Plan p;
    p.z = z;
    if (z == 0.0) {
        p.closed_form = zero_argument_limit(mu);
        return p;
    }
    p.scale = 1.0 / (2.0 * pi);
    p.power = mu;
    p.kernel = [mu, z](double t, SeriesDiagnostics& d) {
        return std::exp(iu * z * std::cos(t)) * gs(mu, 0.5 * iu * z * unit(t), d);
    };
    return p;
}

Plan j_sin_plan(cplx mu, unsigned n, cplx z) {
    Plan p;
    p.z = z;
    if (z == 0.0) {
        p.closed_form = zero_argument_limit(mu + static_cast<double>(n));
        return p;
    }
    p.scale = 1.0 / (2.0 * pi);
    p.power = mu;
    if (n == 0) {
        p.kernel = [mu, z](double t, SeriesDiagnostics& d) {
            return std::exp(iu * z * std::sin(t)) * gs(mu, 0.5 * z * unit(t), d);
        };
    } else {
        const double nn = static_cast<double>(n);
        p.kernel = [mu, z, nn](double t, SeriesDiagnostics& d) {
            return std::exp(iu * z * std::sin(t)) * gs(mu, 0.5 * z * unit(t), d) * unit(-nn * t);
        };
    }
    return p;
}

Plan kappa_plan(long n, cplx mu, cplx z) {
    Plan p;
    p.z = z;
    const double nn = static_cast<double>(n);
    p.kernel = [mu, z, nn](double t, SeriesDiagnostics& d) {
        return std::exp(iu * z * std::sin(t)) * gs(mu, 0.5 * z * unit(t), d) * unit(nn * t);
    };
    return p;
}

Plan i_cos_plan(cplx mu, cplx z) {
    Plan p;
    p.z = z;
    if (z == 0.0) {
        p.closed_form = zero_argument_limit(mu);
        return p;
    }
    p.scale = 1.0 / (2.0 * pi);
    p.power = mu;
    p.kernel = [mu, z](double t, SeriesDiagnostics& d) {
        return std::exp(z * std::cos(t)) * gs(mu, 0.5 * z * unit(t), d);
    };
    return p;
}

Plan j_kummer_plan(cplx mu, cplx z) {
    require_kummer_order(1.0 + mu);
    Plan p;
    p.z = z;
    if (z == 0.0) {
        p.closed_form = zero_argument_limit(mu);
        return p;
    }
    p.scale = recip_gamma(1.0 + mu) / (2.0 * pi);
    p.power = mu;
    p.kernel = [mu, z](double t, SeriesDiagnostics& d) {
        return std::exp(0.5 * iu * z * unit(-t)) * m1(mu, 0.5 * iu * z * unit(t), d);
    };
    return p;
}

Plan i_kummer_plan(cplx mu, cplx z) {
    require_kummer_order(1.0 + mu);
    Plan p;
    p.z = z;
    if (z == 0.0) {
        p.closed_form = zero_argument_limit(mu);
        return p;
    }
    p.scale = recip_gamma(1.0 + mu) / (2.0 * pi);
    p.power = mu;
    p.kernel = [mu, z](double t, SeriesDiagnostics& d) {
        return std::exp(0.5 * z * unit(-t)) * m1(mu, 0.5 * z * unit(t), d);
    };
    return p;
}

void require_derivative_order(cplx k) {
    if (!(k.real() > -1.0))
        throw DomainError("derivative order must satisfy Re k > -1");
}

Plan deriv_plan(cplx mu, cplx k, cplx z) {
    require_derivative_order(k);
    if (k == 0.0)
        return j_sin_plan(mu, 0, z);
    Plan p;
    p.z = z;
    p.scale = 1.0 / (2.0 * pi);
    p.power = mu - k;
    if (!as_integer(k))
        p.budget_factor = fractional_budget_factor;
    const cplx order = mu - k;
    p.kernel = [order, k, z](double t, SeriesDiagnostics& d) {
        return std::exp(iu * z * std::sin(t)) * gs(order, 0.5 * z * unit(t), d) * derivative_weight(k, t);
    };
    return p;
}

Plan deriv_kummer_plan(cplx mu, cplx k, cplx z) {
    require_derivative_order(k);
    const cplx order = mu - k;
    require_kummer_order(1.0 + order);
    Plan p;
    p.z = z;
    p.scale = recip_gamma(1.0 + order) / (2.0 * pi);
    p.power = order;
    if (!as_integer(k))
        p.budget_factor = fractional_budget_factor;
    p.kernel = [order, k, z](double t, SeriesDiagnostics& d) {
        return std::exp(-0.5 * z * unit(-t)) * m1(order, 0.5 * z * unit(t), d) * derivative_weight(k, t);
    };
    return p;
}

[[noreturn]] void unsupported(Function f, Representation r) {
    throw DomainError(std::string("representation ") + std::string(to_string(r)) +
                      " is not available for function " + std::string(to_string(f)));
}

Plan build_plan(Function f, Representation r, const OrderArg& a) {
    const cplx shifted = a.mu + static_cast<double>(a.n);
    switch (f) {
    case Function::J:
        switch (r) {
        case Representation::Auto:
        case Representation::CosKernel:
            return j_cos_plan(shifted, a.z);
        case Representation::SinKernel:
            if (a.n >= 0)
                return j_sin_plan(a.mu, static_cast<unsigned>(a.n), a.z);
            return j_sin_plan(shifted, 0, a.z);
        case Representation::Kummer:
            return j_kummer_plan(shifted, a.z);
        }
        break;
    case Function::I:
        switch (r) {
        case Representation::Auto:
        case Representation::CosKernel:
            return i_cos_plan(shifted, a.z);
        case Representation::Kummer:
            return i_kummer_plan(shifted, a.z);
        default:
            unsupported(f, r);
        }
        break;
    case Function::JDeriv:
        switch (r) {
        case Representation::Auto:
        case Representation::SinKernel:
            return deriv_plan(shifted, a.k, a.z);
        case Representation::Kummer:
            return deriv_kummer_plan(shifted, a.k, a.z);
        default:
            unsupported(f, r);
        }
        break;
    case Function::Kappa:
        if (r == Representation::Auto || r == Representation::SinKernel)
            return kappa_plan(a.n, a.mu, a.z);
        unsupported(f, r);
    }
    unsupported(f, r);
}

void add_warning(EvalOutput& out, Warning w) {
    if (!out.has(w))
        out.warnings.push_back(w);
}

EvalOutput run(const Plan& p, const QuadratureSpec& spec) {
    EvalOutput out;
    if (p.closed_form) {
        out.value = *p.closed_form;
        return out;
    }

    // Prefactor first: a BranchError should not cost a quadrature.
    cplx prefactor = p.scale;
    double conditioning = 1.0;
    if (p.power) {
        prefactor *= principal_pow(0.5 * p.z, *p.power);
        if (p.z != 0.0 && *p.power != 0.0)
            conditioning += std::abs(*p.power * principal_log(0.5 * p.z));
        if (!as_integer(*p.power) && near_negative_axis(p.z))
            add_warning(out, Warning::BranchCutProximity);
    }

    SeriesDiagnostics worst;
    const Kernel& kernel = p.kernel;
    const PeriodicIntegrand integrand = [&kernel, &worst](double t) {
        SeriesDiagnostics d;
        const cplx v = kernel(t, d);
        worst.merge(d);
        return v;
    };
    const QuadratureResult q = periodic_trapezoid(integrand, spec);

    out.value = prefactor * q.value;
    out.nodes_used = q.nodes_used;
    out.series_diag = worst;
    const double series_loss = std::pow(10.0, std::max(0.0, worst.cancellation_digits));
    out.err_est = std::abs(prefactor) * q.err_est + std::abs(out.value) * eps * (conditioning + series_loss);

    const double tolerance = spec.rtol * std::abs(out.value) + spec.atol;
    if (!q.converged)
        add_warning(out, Warning::SlowConvergence);
    if (worst.cancellation_digits > cancellation_warn_digits)
        add_warning(out, Warning::CancellationLoss);
    if (out.warnings.empty() && out.err_est > tolerance)
        add_warning(out, Warning::CancellationLoss);
    return out;
}

EvalOutput run_adaptive(const Plan& p, QuadratureSpec spec) {
    if (p.budget_factor > 1 && spec.n_max <= std::numeric_limits<std::size_t>::max() / p.budget_factor)
        spec.n_max *= p.budget_factor;
    return run(p, spec);
}

} // namespace

std::string_view to_string(Warning w) noexcept {
    switch (w) {
    case Warning::BranchCutProximity:
        return "BranchCutProximity";
    case Warning::SlowConvergence:
        return "SlowConvergence";
    case Warning::CancellationLoss:
        return "CancellationLoss";
    }
    return "Unknown";
}

std::string_view to_string(Function f) noexcept {
    switch (f) {
    case Function::J:
        return "J";
    case Function::I:
        return "I";
    case Function::JDeriv:
        return "Jderiv";
    case Function::Kappa:
        return "kappa";
    }
    return "unknown";
}

std::string_view to_string(Representation r) noexcept {
    switch (r) {
    case Representation::CosKernel:
        return "cos_kernel";
    case Representation::SinKernel:
        return "sin_kernel";
    case Representation::Kummer:
        return "kummer";
    case Representation::Auto:
        return "auto";
    }
    return "unknown";
}

bool EvalOutput::has(Warning w) const noexcept {
    return std::find(warnings.begin(), warnings.end(), w) != warnings.end();
}

EvalOutput bessel_j(cplx mu, cplx z, const QuadratureSpec& spec) {
    return run_adaptive(j_cos_plan(mu, z), spec);
}

EvalOutput bessel_j_sin_kernel(cplx mu, cplx z, const QuadratureSpec& spec) {
    return bessel_j_shifted(mu, 0, z, spec);
}

EvalOutput bessel_j_shifted(cplx mu, unsigned n, cplx z, const QuadratureSpec& spec) {
    return run_adaptive(j_sin_plan(mu, n, z), spec);
}

EvalOutput kappa_fourier_coeff(long n, cplx mu, cplx z, const QuadratureSpec& spec) {
    return run_adaptive(kappa_plan(n, mu, z), spec);
}

EvalOutput bessel_i(cplx mu, cplx z, const QuadratureSpec& spec) {
    return run_adaptive(i_cos_plan(mu, z), spec);
}

EvalOutput bessel_j_deriv(cplx mu, cplx k, cplx z, const QuadratureSpec& spec) {
    return run_adaptive(deriv_plan(mu, k, z), spec);
}

EvalOutput bessel_j_kummer(cplx mu, cplx z, const QuadratureSpec& spec) {
    return run_adaptive(j_kummer_plan(mu, z), spec);
}

EvalOutput bessel_i_kummer(cplx mu, cplx z, const QuadratureSpec& spec) {
    return run_adaptive(i_kummer_plan(mu, z), spec);
}

EvalOutput bessel_j_deriv_kummer(cplx mu, cplx k, cplx z, const QuadratureSpec& spec) {
    return run_adaptive(deriv_kummer_plan(mu, k, z), spec);
}

EvalOutput evaluate(Function f, Representation r, const OrderArg& arg, const QuadratureSpec& spec) {
    return run_adaptive(build_plan(f, r, arg), spec);
}

EvalOutput evaluate_fixed_nodes(Function f, Representation r, const OrderArg& arg, std::size_t n_nodes) {
    QuadratureSpec spec;
    spec.n_start = n_nodes;
    spec.n_max = n_nodes;
    return run(build_plan(f, r, arg), spec);
}

} // namespace besselquad
