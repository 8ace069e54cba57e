#include "besselquad/identity_suite.hpp"

#include "besselquad/bessel.hpp"
#include "besselquad/errors.hpp"
#include "besselquad/gamma_star.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>

namespace besselquad {

namespace {

constexpr cplx iu{0.0, 1.0};

std::string fmt(cplx v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", v.real(), v.imag());
    return buf;
}

// Accumulates sample comparisons |got - want| <= rtol |want| + atol.
class Tracker {
public:
    Tracker(std::string id, double rtol, double atol) : rtol_(rtol), atol_(atol) { rep_.identity_id = std::move(id); }

    void compare(cplx got, cplx want, const std::string& label) {
        const double abs_err = std::abs(got - want);
        const double mag = std::abs(want);
        const double rel_err = mag > 0.0 ? abs_err / mag : abs_err;
        const bool ok = std::isfinite(abs_err) && abs_err <= rtol_ * mag + atol_;
        record(abs_err, rel_err, ok, label);
    }

    /// Error measured against `scale` instead of |want|, for identities whose
    /// terms are much larger than their result.
    void compare_scaled(cplx got, cplx want, double scale, const std::string& label) {
        const double abs_err = std::abs(got - want);
        const double rel_err = scale > 0.0 ? abs_err / scale : abs_err;
        record(abs_err, rel_err, std::isfinite(abs_err) && abs_err <= rtol_ * scale + atol_, label);
    }

    /// A sample judged by an externally computed error and verdict.
    void record(double abs_err, double rel_err, bool ok, const std::string& label) {
        ++rep_.samples;
        rep_.max_abs_err = std::max(rep_.max_abs_err, abs_err);
        rep_.max_rel_err = std::max(rep_.max_rel_err, rel_err);
        if (!ok) {
            ++failures_;
            if (rep_.detail.empty())
                rep_.detail = "first failure at " + label;
        }
    }

    IdentityReport report() {
        rep_.tolerance = rtol_;
        rep_.pass = failures_ == 0 && rep_.samples > 0;
        if (rep_.samples == 0)
            rep_.detail = "no samples";
        return rep_;
    }

private:
    IdentityReport rep_;
    double rtol_;
    double atol_;
    std::size_t failures_ = 0;
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

cplx random_disk(std::mt19937_64& rng, double radius) {
    const double r = radius * std::sqrt(uniform(rng, 0.0, 1.0));
    return std::polar(r, uniform(rng, -pi, pi));
}

double distance_to_poles(cplx s) {
    const double n = s.real() >= 0.0 ? 0.0 : std::round(-s.real());
    return std::abs(s + n);
}

// Random order with 1 + mu at distance > 0.1 from the nonpositive integers.
cplx random_order(std::mt19937_64& rng, double radius) {
    for (;;) {
        const cplx mu = random_disk(rng, radius);
        if (distance_to_poles(mu + 1.0) > 0.1)
            return mu;
    }
}

// The grids shared with the acceptance criteria.
const std::array<cplx, 7> order_grid{cplx{-2.5, 0}, cplx{-1, 0}, cplx{-0.5, 0.3}, cplx{0, 0},
                                     cplx{0.5, 0},  cplx{1, 0},  cplx{3.7, 1}};
const std::array<cplx, 5> argument_grid{cplx{0.1, 0}, cplx{1, 0}, cplx{2, 1}, cplx{5, 0},
                                        std::polar(10.0, pi / 4.0)};

std::string at(cplx mu, cplx z) { return "mu=" + fmt(mu) + " z=" + fmt(z); }

// Random argument away from the negative real axis.
cplx random_argument(std::mt19937_64& rng, double radius) {
    const double r = radius * std::sqrt(uniform(rng, 0.0025, 1.0));
    return std::polar(r, uniform(rng, -pi + 0.1, pi - 0.1));
}

IdentityReport gamma_recurrence(std::mt19937_64& rng) {
    Tracker t("gamma_recurrence", 1e-12, 0.0);
    for (int i = 0; i < 200; ++i) {
        cplx s;
        do {
            s = random_disk(rng, 15.0);
        } while (distance_to_poles(s) < 0.1);
        t.compare(gamma_fn(s + 1.0), s * gamma_fn(s), "s=" + fmt(s));
        t.compare(recip_gamma(s) * gamma_fn(s), 1.0, "s=" + fmt(s));
    }
    return t.report();
}

IdentityReport gamma_star_negative_integer(std::mt19937_64&) {
    Tracker t("gamma_star_negative_integer", 1e-12, 0.0);
    const std::array<double, 5> radii{0.0, 0.5, 2.0, 5.0, 10.0};
    for (int n = 0; n <= 8; ++n)
        for (double r : radii)
            for (int a = 0; a < 8; ++a) {
                const cplx w = std::polar(r, -pi + 2.0 * pi * (a + 0.5) / 8.0);
                t.compare(gamma_star(-static_cast<double>(n), w).value, int_pow(w, n),
                          "n=" + std::to_string(n) + " w=" + fmt(w));
            }
    return t.report();
}

IdentityReport gamma_star_entire(std::mt19937_64&) {
    // Second differences along real-mu transects through 0, -1, ..., -4: a
    // pole or jump would show up as an O(1) defect.
    Tracker t("gamma_star_entire", 1e-4, 0.0);
    const std::array<cplx, 5> ws{cplx{0.5, 0}, cplx{2, 1}, cplx{-3, 0}, cplx{0, 5}, cplx{5, 0}};
    const double h = 1e-3;
    for (cplx w : ws)
        for (int n = 0; n <= 4; ++n)
            for (int j = -20; j <= 20; ++j) {
                const double mu = -n + j * h;
                const cplx f0 = gamma_star(mu, w).value;
                const cplx fm = gamma_star(mu - h, w).value;
                const cplx fp = gamma_star(mu + h, w).value;
                const double defect = std::abs(f0 - 0.5 * (fm + fp));
                const double scale = std::max(1.0, std::abs(f0));
                t.record(defect, defect / scale, defect <= 1e-4 * scale, "mu=" + std::to_string(mu) + " w=" + fmt(w));
            }
    return t.report();
}

IdentityReport gamma_star_kummer(std::mt19937_64& rng) {
    Tracker t("gamma_star_kummer", 1e-10, 1e-13);
    for (int i = 0; i < 1000; ++i) {
        const cplx mu = random_order(rng, 6.0);
        const cplx w = random_disk(rng, 10.0);
        const cplx lhs = kummer_m1(mu, w).value * std::exp(-w) * recip_gamma(1.0 + mu);
        t.compare(lhs, gamma_star(mu, w).value, "mu=" + fmt(mu) + " w=" + fmt(w));
    }
    return t.report();
}

IdentityReport gamma_star_euler_integral(std::mt19937_64& rng) {
    Tracker t("gamma_star_euler_integral", 1e-9, 0.0);
    std::vector<std::pair<cplx, cplx>> cases;
    for (double mu : {0.5, 1.0, 2.7})
        for (cplx w : {cplx{0.25, 0}, cplx{1, 0}, cplx{1, 2}, cplx{5, 0}})
            cases.emplace_back(mu, w);
    for (int i = 0; i < 8; ++i)
        cases.emplace_back(cplx{uniform(rng, 0.3, 4.0), uniform(rng, -1.0, 1.0)}, random_argument(rng, 6.0));
    for (const auto& [mu, w] : cases) {
        const cplx subject = gamma_star(mu, w).value * gamma_fn(mu) * principal_pow(w, mu);
        t.compare(subject, gamma_lower_direct(mu, w), "mu=" + fmt(mu) + " w=" + fmt(w));
    }
    return t.report();
}

IdentityReport lower_p_recurrence(std::mt19937_64& rng) {
    Tracker t("lower_p_recurrence", 1e-10, 1e-14);
    for (int i = 0; i < 100; ++i) {
        const cplx nu = random_order(rng, 4.0);
        const cplx w = random_argument(rng, 8.0);
        const cplx base = lower_p(nu, w);
        cplx partial = 0.0;
        cplx wk = 1.0;
        for (int ell = 0; ell <= 5; ++ell) {
            const cplx rhs = base - principal_pow(w, nu) * std::exp(-w) * partial;
            t.compare(lower_p(nu + static_cast<double>(ell), w), rhs,
                      "nu=" + fmt(nu) + " w=" + fmt(w) + " l=" + std::to_string(ell));
            partial += wk * recip_gamma(nu + static_cast<double>(ell) + 1.0);
            wk *= w;
        }
    }
    return t.report();
}

IdentityReport gamma_star_order_recurrence(std::mt19937_64& rng) {
    Tracker t("gamma_star_order_recurrence", 1e-9, 1e-13);
    for (int i = 0; i < 100; ++i) {
        const cplx mu = random_disk(rng, 4.0);
        cplx w = random_disk(rng, 6.0);
        if (std::abs(w) < 0.5)
            w += 1.0;
        const unsigned n = static_cast<unsigned>(i % 7);
        const cplx base = gamma_star(mu, w).value;
        t.compare(gamma_star_shift(mu, n, w, base), gamma_star(mu + static_cast<double>(n), w).value,
                  "mu=" + fmt(mu) + " w=" + fmt(w) + " n=" + std::to_string(n));
    }
    return t.report();
}

IdentityReport gamma_decomposition(std::mt19937_64& rng) {
    Tracker t("gamma_decomposition", 1e-11, 0.0);
    for (int i = 0; i < 100; ++i) {
        cplx mu;
        do {
            mu = random_disk(rng, 6.0);
        } while (distance_to_poles(mu) < 0.1);
        const cplx w = random_argument(rng, 8.0);
        // The two pieces can be far larger than Gamma(mu); the sum cannot be
        // more accurate than its largest term.
        const cplx lower = gamma_lower(mu, w);
        const cplx full = gamma_fn(mu);
        t.compare_scaled(lower + gamma_upper(mu, w), full, std::max(std::abs(full), std::abs(lower)),
                         "mu=" + fmt(mu) + " w=" + fmt(w));
    }
    return t.report();
}

IdentityReport oracle_cross_agreement(std::mt19937_64&) {
    Tracker t("oracle_cross_agreement", 1e-10, 1e-12);
    const std::array<cplx, 6> zs{cplx{0.1, 0}, cplx{1, 0}, cplx{2, 1}, cplx{5, 0}, cplx{3, -2}, cplx{-4, 0.5}};
    for (long m = -3; m <= 3; ++m)
        for (cplx z : zs)
            t.compare(bessel_integral_oracle(m, z), series_j(static_cast<double>(m), z).value,
                      "integral " + at(static_cast<double>(m), z));
    for (cplx mu : {cplx{-0.4, 0}, cplx{0, 0}, cplx{0.5, 0}, cplx{1.3, 0.2}, cplx{2, 0}})
        for (cplx z : {cplx{0.1, 0}, cplx{1, 0}, cplx{2, 1}, cplx{5, 0}, cplx{3, -2}})
            t.compare(poisson_integral_oracle(mu, z), series_j(mu, z).value, "poisson " + at(mu, z));
    return t.report();
}

IdentityReport j_negative_integer_order(std::mt19937_64& rng) {
    Tracker t("j_negative_integer_order", 1e-11, 1e-300);
    for (int i = 0; i < 60; ++i) {
        const cplx z = random_disk(rng, 10.0);
        const int n = 1 + i % 6;
        const cplx pos = series_j(static_cast<double>(n), z).value;
        t.compare(series_j(-static_cast<double>(n), z).value, (n % 2 == 0) ? pos : -pos,
                  "n=" + std::to_string(n) + " z=" + fmt(z));
    }
    return t.report();
}

IdentityReport series_connection(std::mt19937_64& rng) {
    Tracker t("series_connection", 1e-11, 1e-300);
    for (int i = 0; i < 100; ++i) {
        const cplx mu = random_disk(rng, 4.0);
        const double r = uniform(rng, 0.05, 8.0);
        const cplx z = std::polar(r, uniform(rng, -pi + 0.05, pi / 2.0 - 0.05));
        t.compare(series_i(mu, z).value, std::exp(-iu * mu * (pi / 2.0)) * series_j(mu, iu * z).value, at(mu, z));
    }
    return t.report();
}

// Subject-vs-oracle sweep over the shared grid plus random points.
template <class Subject>
IdentityReport against_series_j(const std::string& id, std::mt19937_64& rng, int extra, Subject&& subject,
                                bool skip_kummer_poles = false) {
    Tracker t(id, 1e-9, 1e-12);
    auto check = [&](cplx mu, cplx z) {
        if (skip_kummer_poles && is_nonpositive_integer(1.0 + mu))
            return;
        t.compare(subject(mu, z), series_j(mu, z).value, at(mu, z));
    };
    for (cplx mu : order_grid)
        for (cplx z : argument_grid)
            check(mu, z);
    for (int i = 0; i < extra; ++i)
        check(random_disk(rng, 4.0), random_argument(rng, 8.0));
    return t.report();
}

IdentityReport main_theorem(std::mt19937_64& rng) {
    return against_series_j("main_theorem", rng, 30, [](cplx mu, cplx z) { return bessel_j(mu, z).value; });
}

IdentityReport sin_kernel(std::mt19937_64& rng) {
    return against_series_j("sin_kernel", rng, 30, [](cplx mu, cplx z) { return bessel_j_sin_kernel(mu, z).value; });
}

IdentityReport kummer_kernel(std::mt19937_64& rng) {
    return against_series_j(
        "kummer_kernel", rng, 30, [](cplx mu, cplx z) { return bessel_j_kummer(mu, z).value; }, true);
}

IdentityReport shifted_orders(std::mt19937_64&) {
    Tracker t("shifted_orders", 1e-9, 1e-12);
    for (cplx mu : {cplx{0.3, 0}, cplx{1, 0}, cplx{-0.5, 0.3}})
        for (cplx z : {cplx{1, 0}, cplx{2, 0}, cplx{2, 1}})
            for (unsigned n = 0; n <= 6; ++n)
                t.compare(bessel_j_shifted(mu, n, z).value, series_j(mu + static_cast<double>(n), z).value,
                          at(mu, z) + " n=" + std::to_string(n));
    return t.report();
}

IdentityReport fourier_coefficients(std::mt19937_64&) {
    Tracker t("fourier_coefficients", 1e-9, 1e-12);
    for (const auto& [mu, z] : {std::pair{cplx{1.5, 0}, cplx{1, 0}}, std::pair{cplx{0.5, 0}, cplx{2, 0}},
                                std::pair{cplx{2.2, 0}, cplx{1, -1}}}) {
        const cplx scale = 2.0 * pi * principal_pow(z / 2.0, -mu);
        for (long n = 1; n <= 4; ++n)
            t.compare(kappa_fourier_coeff(n, mu, z).value,
                      scale * series_j_shifted(mu, static_cast<unsigned>(n), z),
                      at(mu, z) + " n=" + std::to_string(n));
        for (long n = 0; n >= -3; --n)
            t.compare(kappa_fourier_coeff(n, mu, z).value, scale * series_j(mu - static_cast<double>(n), z).value,
                      at(mu, z) + " n=" + std::to_string(n));
    }
    return t.report();
}

IdentityReport modified_bessel(std::mt19937_64& rng) {
    Tracker t("modified_bessel", 1e-9, 1e-12);
    for (cplx mu : order_grid)
        for (cplx z : argument_grid)
            t.compare(bessel_i(mu, z).value, series_i(mu, z).value, at(mu, z));
    for (int i = 0; i < 30; ++i) {
        const cplx mu = random_disk(rng, 4.0);
        const cplx z = random_argument(rng, 8.0);
        t.compare(bessel_i(mu, z).value, series_i(mu, z).value, at(mu, z));
    }
    return t.report();
}

IdentityReport connection_relation(std::mt19937_64& rng) {
    // Needs arg z in (-pi, pi/2]; the lower half-plane points are where a
    // wrong branch convention for (z/2)^mu shows.
    Tracker t("connection_relation", 1e-9, 1e-12);
    std::vector<cplx> zs(argument_grid.begin(), argument_grid.end());
    for (cplx z : {cplx{1, -1}, std::polar(2.0, -pi / 3.0), cplx{-1, -2}, cplx{0, -3}, std::polar(4.0, -2.5)})
        zs.push_back(z);
    auto check = [&](cplx mu, cplx z) {
        const cplx rhs = std::exp(-iu * mu * (pi / 2.0)) * bessel_j(mu, iu * z).value;
        t.compare(bessel_i(mu, z).value, rhs, at(mu, z));
    };
    for (cplx mu : order_grid)
        for (cplx z : zs)
            check(mu, z);
    for (int i = 0; i < 20; ++i) {
        const cplx mu = random_disk(rng, 4.0);
        check(mu, std::polar(uniform(rng, 0.1, 8.0), uniform(rng, -pi + 0.1, pi / 2.0)));
    }
    return t.report();
}

IdentityReport derivative_binomial(std::mt19937_64&) {
    Tracker t("derivative_binomial", 1e-8, 1e-12);
    for (const auto& [mu, z] :
         {std::pair{cplx{0, 0}, cplx{1, 0}}, std::pair{cplx{1, 0}, cplx{2, 0}}, std::pair{cplx{2.5, 0}, cplx{1, 1}},
          std::pair{cplx{-0.7, 0.4}, cplx{3, -1}}})
        for (unsigned k = 1; k <= 3; ++k)
            t.compare(bessel_j_deriv(mu, static_cast<double>(k), z).value, deriv_binomial_oracle(mu, k, z),
                      at(mu, z) + " k=" + std::to_string(k));
    return t.report();
}

IdentityReport derivative_kummer(std::mt19937_64&) {
    Tracker t("derivative_kummer", 1e-8, 1e-12);
    for (const auto& [mu, z] :
         {std::pair{cplx{0.5, 0}, cplx{1, 0}}, std::pair{cplx{1.5, 0}, cplx{2, 0}}, std::pair{cplx{2.5, 0}, cplx{1, 1}}})
        for (unsigned k = 0; k <= 2; ++k)
            t.compare(bessel_j_deriv_kummer(mu, static_cast<double>(k), z).value, deriv_binomial_oracle(mu, k, z),
                      at(mu, z) + " k=" + std::to_string(k));
    return t.report();
}

IdentityReport modified_kummer(std::mt19937_64&) {
    Tracker t("modified_kummer", 1e-9, 1e-12);
    for (cplx mu : order_grid) {
        if (is_nonpositive_integer(1.0 + mu))
            continue;
        for (cplx z : argument_grid)
            t.compare(bessel_i_kummer(mu, z).value, series_i(mu, z).value, at(mu, z));
    }
    return t.report();
}

IdentityReport derivative_order_zero(std::mt19937_64&) {
    Tracker t("derivative_order_zero", 0.0, 0.0);
    for (cplx mu : order_grid)
        for (cplx z : argument_grid) {
            const cplx a = bessel_j_deriv(mu, 0.0, z).value;
            const cplx b = bessel_j_sin_kernel(mu, z).value;
            const bool same = a.real() == b.real() && a.imag() == b.imag();
            const double d = std::abs(a - b);
            t.record(d, d, same, at(mu, z));
        }
    return t.report();
}

IdentityReport fractional_continuity(std::mt19937_64&) {
    Tracker t("fractional_continuity", 1e-2, 0.0);
    for (const auto& [mu, z] : {std::pair{cplx{1, 0}, cplx{2, 0}}, std::pair{cplx{0, 0}, cplx{1, 0}},
                                std::pair{cplx{2.5, 0}, cplx{1, 1}}})
        for (double k0 : {0.5, 1.5}) {
            const cplx f0 = bessel_j_deriv(mu, k0, z).value;
            const double scale = std::max(1.0, std::abs(f0));
            for (double dk : {-1e-4, 1e-4}) {
                const double d = std::abs(bessel_j_deriv(mu, k0 + dk, z).value - f0);
                t.record(d, d / scale, d <= 1e-2 * scale, at(mu, z) + " k=" + std::to_string(k0 + dk));
            }
        }
    return t.report();
}

IdentityReport vanishing_moments(std::mt19937_64&) {
    Tracker t("vanishing_moments", 1e-10, 0.0);
    for (cplx z : {cplx{0, 0}, cplx{1, 0}, cplx{2, 0}, cplx{1, 1}, cplx{5, 0}, cplx{-3, 0}, cplx{0, 2}, cplx{3, -4}})
        for (unsigned n = 1; n <= 6; ++n) {
            const IdentityReport r = vanishing_moment_check(1.0, z, n);
            t.record(r.max_abs_err, r.max_rel_err, r.pass, "z=" + fmt(z) + " n=" + std::to_string(n));
        }
    return t.report();
}

IdentityReport beta_moments(std::mt19937_64&) {
    Tracker t("beta_moments", 1e-6, 0.0);
    auto add = [&](cplx nu, unsigned k, unsigned ell) {
        const IdentityReport r = beta_moment_identity(nu, k, ell);
        t.record(r.max_abs_err, r.max_rel_err, r.pass,
                 "nu=" + fmt(nu) + " k=" + std::to_string(k) + " l=" + std::to_string(ell));
    };
    add(1.0, 0, 0);
    add({0.7, 0.1}, 2, 1);
    add(2.5, 3, 2);
    add(0.3, 1, 1);
    add({-0.2, 0.5}, 2, 0);
    for (cplx nu : {cplx{0.3, 0}, cplx{1, 0}, cplx{2.5, 0}, cplx{0.7, 0.1}, cplx{0.5, 0}})
        for (unsigned ell = 1; ell <= 4; ++ell)
            for (unsigned k = 0; k < ell; ++k)
                add(nu, k, ell);
    return t.report();
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

const IdentityRegistry& default_registry() {
    static const IdentityRegistry registry{
        {"gamma_recurrence", "Gamma(s+1) = s Gamma(s) and Gamma(s)/Gamma(s) = 1", gamma_recurrence},
        {"gamma_star_negative_integer", "gamma*(-n, w) = w^n", gamma_star_negative_integer},
        {"gamma_star_entire", "gamma*(mu, w) smooth across mu = 0, -1, ..., -4", gamma_star_entire},
        {"gamma_star_kummer", "M(1, 1+mu; w) e^{-w} / Gamma(1+mu) = gamma*(mu, w)", gamma_star_kummer},
        {"gamma_star_euler_integral", "Gamma(mu) w^mu gamma*(mu, w) = int_0^w e^{-t} t^{mu-1} dt",
         gamma_star_euler_integral},
        {"lower_p_recurrence", "P(nu+l, w) = P(nu, w) - w^nu e^{-w} sum_{k<l} w^k / Gamma(nu+k+1)",
         lower_p_recurrence},
        {"gamma_star_order_recurrence", "gamma*(mu+n, w) by the upward recurrence", gamma_star_order_recurrence},
        {"gamma_decomposition", "gamma(mu, w) + Gamma(mu, w) = Gamma(mu)", gamma_decomposition},
        {"oracle_cross_agreement", "power series, Bessel integral and Poisson integral agree", oracle_cross_agreement},
        {"j_negative_integer_order", "J_{-n}(z) = (-1)^n J_n(z) by the power series", j_negative_integer_order},
        {"series_connection", "I_mu(z) = e^{-i mu pi/2} J_mu(iz) by the power series", series_connection},
        {"main_theorem", "cosine-kernel integral for J_mu(z)", main_theorem},
        {"sin_kernel", "sine-kernel integral for J_mu(z)", sin_kernel},
        {"kummer_kernel", "Kummer-kernel integral for J_mu(z)", kummer_kernel},
        {"shifted_orders", "J_{mu+n}(z) from the order-mu sine kernel", shifted_orders},
        {"fourier_coefficients", "Fourier coefficients of the sine kernel", fourier_coefficients},
        {"modified_bessel", "integral for I_mu(z) against its series", modified_bessel},
        {"modified_kummer", "Kummer-kernel integral for I_mu(z)", modified_kummer},
        {"connection_relation", "I_mu(z) = e^{-i mu pi/2} J_mu(iz) by the integrals", connection_relation},
        {"derivative_binomial", "k-th derivative integral against the binomial sum", derivative_binomial},
        {"derivative_kummer", "Kummer-kernel derivative against the binomial sum", derivative_kummer},
        {"derivative_order_zero", "derivative of order 0 is the sine kernel, bit for bit", derivative_order_zero},
        {"fractional_continuity", "derivative continuous in fractional k", fractional_continuity},
        {"vanishing_moments", "int exp(-z e^{-it}/2) e^{i(k-n)t} dt = 0 for k < n", vanishing_moments},
        {"beta_moments", "cosine-power moments against the beta closed form", beta_moments},
    };
    return registry;
}

std::vector<IdentityReport> run_identity_suite(const IdentityRegistry& registry, const SuiteConfig& config) {
    std::vector<IdentityReport> reports;
    for (const Identity& id : registry) {
        if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), id.id) == config.only.end())
            continue;
        std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                          static_cast<std::uint32_t>(fnv1a(id.id)), static_cast<std::uint32_t>(fnv1a(id.id) >> 32)};
        std::mt19937_64 rng(seq);
        IdentityReport rep;
        try {
            rep = id.run(rng);
        } catch (const std::exception& e) {
            rep = IdentityReport{};
            rep.pass = false;
            rep.detail = std::string("exception: ") + e.what();
        }
        rep.identity_id = id.id;
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::vector<IdentityReport> run_identity_suite(const SuiteConfig& config) {
    return run_identity_suite(default_registry(), config);
}

} // namespace besselquad
