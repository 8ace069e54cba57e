#include "besselquad/quadrature.hpp"

#include "besselquad/errors.hpp"
#include "besselquad/summation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace besselquad {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
// Doubling differences below this multiple of eps * sum|w f| are rounding.
constexpr double noise_factor = 128.0;

constexpr std::size_t gl_order = 20;
// Geometric grading towards the singular end: ratio and layers per level.
constexpr double grading_ratio = 1.0 / 6.0;
constexpr std::size_t layers_per_level = 12;

struct GaussLegendre {
    std::array<double, gl_order> x{};
    std::array<double, gl_order> w{};
};

GaussLegendre make_gauss_legendre() {
    GaussLegendre gl;
    constexpr int n = static_cast<int>(gl_order);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-17)
                break;
        }
        gl.x[i] = x;
        gl.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return gl;
}

const GaussLegendre& gauss_legendre() {
    static const GaussLegendre gl = make_gauss_legendre();
    return gl;
}

template <class F, class Arg>
cplx evaluate_node(const F& f, Arg at) {
    cplx v;
    try {
        v = f(at);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw NodeEvaluationError(std::string("integrand failed at a quadrature node: ") + e.what());
    }
    if (!is_finite(v))
        throw NodeEvaluationError("integrand returned a non-finite value at a quadrature node");
    return v;
}

bool is_power_of_two(std::size_t n) { return std::has_single_bit(n); }

bool accept(double diff, cplx value, double abs_mass, const QuadratureSpec& spec, bool& roundoff) {
    roundoff = false;
    if (diff <= spec.rtol * std::abs(value) + spec.atol)
        return true;
    if (diff <= noise_factor * eps * abs_mass) {
        roundoff = true;
        return true;
    }
    return false;
}

struct SegmentLevel {
    cplx value;
    double abs_mass;
    std::size_t nodes;
};

std::size_t segment_nodes(std::size_t level) {
    const std::size_t panels = (std::size_t{1} << level) + layers_per_level * (level + 1);
    return panels * gl_order;
}

SegmentLevel segment_level(const PathIntegrand& f, cplx a, cplx b, std::size_t level) {
    const GaussLegendre& gl = gauss_legendre();
    const std::size_t uniform = std::size_t{1} << level;
    const std::size_t layers = layers_per_level * (level + 1);
    const double h = 1.0 / static_cast<double>(uniform);
    const cplx length = b - a;

    ComplexNeumaierSum sum;
    NeumaierSum mass;
    auto panel = [&](double lo, double hi) {
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        for (std::size_t i = 0; i < gl_order; ++i) {
            const double s = mid + half * gl.x[i];
            const cplx v = evaluate_node(f, a + length * s) * (half * gl.w[i]);
            sum.add(v);
            mass.add(std::abs(v));
        }
    };

    // First uniform panel, split geometrically towards s = 0.
    double lo = 0.0;
    for (std::size_t g = layers; g > 0; --g) {
        const double hi = h * std::pow(grading_ratio, static_cast<double>(g));
        panel(lo, hi);
        lo = hi;
    }
    panel(lo, h);
    for (std::size_t p = 1; p < uniform; ++p)
        panel(static_cast<double>(p) * h, static_cast<double>(p + 1) * h);

    return {sum.value() * length, mass.value() * std::abs(length), segment_nodes(level)};
}

} // namespace

void QuadratureSpec::validate() const {
    if (n_start < 8 || n_max < n_start || !is_power_of_two(n_start) || !is_power_of_two(n_max))
        throw DomainError("QuadratureSpec: need 8 <= n_start <= n_max, both powers of two");
    if (!(rtol > 0.0) || !(atol > 0.0))
        throw DomainError("QuadratureSpec: rtol and atol must be positive");
}

std::vector<double> periodic_nodes(std::size_t n) {
    std::vector<double> nodes(n);
    const double step = 2.0 * pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j)
        nodes[j] = -pi + step * (static_cast<double>(j) + 0.5);
    return nodes;
}

PeriodicSum periodic_sum(const PeriodicIntegrand& f, std::size_t n) {
    const double step = 2.0 * pi / static_cast<double>(n);
    ComplexNeumaierSum sum;
    NeumaierSum mass;
    for (std::size_t j = 0; j < n; ++j) {
        const cplx v = evaluate_node(f, -pi + step * (static_cast<double>(j) + 0.5));
        sum.add(v);
        mass.add(std::abs(v));
    }
    return {sum.value() * step, mass.value() * step};
}

QuadratureResult periodic_trapezoid(const PeriodicIntegrand& f, const QuadratureSpec& spec) {
    spec.validate();
    std::size_t n = spec.n_start;
    PeriodicSum prev = periodic_sum(f, n == spec.n_max ? n / 2 : n);
    if (n == spec.n_max)
        n /= 2;

    QuadratureResult result;
    while (n < spec.n_max) {
        n *= 2;
        const PeriodicSum cur = periodic_sum(f, n);
        const double diff = std::abs(cur.value - prev.value);
        result.value = cur.value;
        result.err_est = diff;
        result.nodes_used = n;
        if (accept(diff, cur.value, std::max(cur.abs_mass, prev.abs_mass), spec, result.roundoff_limited)) {
            result.converged = true;
            return result;
        }
        prev = cur;
    }
    result.converged = false;
    return result;
}

QuadratureResult segment_quad(const PathIntegrand& f, cplx a, cplx b, const QuadratureSpec& spec) {
    spec.validate();
    std::size_t level = 0;
    while (segment_nodes(level) < spec.n_start)
        ++level;

    QuadratureResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }
    SegmentLevel prev = segment_level(f, a, b, level);
    result.value = prev.value;
    result.nodes_used = prev.nodes;
    result.err_est = std::abs(prev.value);
    while (segment_nodes(level + 1) <= spec.n_max) {
        ++level;
        const SegmentLevel cur = segment_level(f, a, b, level);
        const double diff = std::abs(cur.value - prev.value);
        result.value = cur.value;
        result.err_est = diff;
        result.nodes_used = cur.nodes;
        if (accept(diff, cur.value, std::max(cur.abs_mass, prev.abs_mass), spec, result.roundoff_limited)) {
            result.converged = true;
            return result;
        }
        prev = cur;
    }
    result.converged = false;
    return result;
}

} // namespace besselquad
