#include "besselquad/bessel.hpp"
#include "besselquad/errors.hpp"
#include "besselquad/oracles.hpp"
#include "check.hpp"
#include "reference_values.hpp"

#include <doctest.h>

using namespace besselquad;
using testing::check_close;

namespace {
const cplx iu{0.0, 1.0};
}

TEST_SUITE("bessel") {

TEST_CASE("J reference values, every J representation") {
    for (const auto& c : reference::besselj) {
        INFO("mu=" << c.a << " z=" << c.b);
        check_close(bessel_j(c.a, c.b).value, c.value, 1e-9, 1e-12);
        check_close(bessel_j_sin_kernel(c.a, c.b).value, c.value, 1e-9, 1e-12);
        if (!is_nonpositive_integer(1.0 + c.a))
            check_close(bessel_j_kummer(c.a, c.b).value, c.value, 1e-9, 1e-12);
    }
}

TEST_CASE("J spec examples") {
    check_close(bessel_j(1.0, 1.0).value, 0.4400505857449335, 1e-10);
    check_close(bessel_j(0.5, 2.0).value, std::sqrt(1.0 / pi) * std::sin(2.0), 1e-12);
    check_close(bessel_j_sin_kernel(2.0, 3.0).value, 0.4860912605858911, 1e-10);
    check_close(bessel_j_kummer(0.0, 1.0).value, 0.7651976865579666, 1e-10);
}

TEST_CASE("J at z = 0") {
    const EvalOutput one = bessel_j(0.0, 0.0);
    CHECK(one.value == cplx{1.0, 0.0});
    CHECK(one.err_est == 0.0);
    CHECK(bessel_j(cplx{1.5, 2.0}, 0.0).value == cplx{0.0, 0.0});
    CHECK(bessel_j(-2.0, 0.0).value == cplx{0.0, 0.0});
    CHECK_THROWS_AS(bessel_j(-0.5, 0.0), BranchError);
    CHECK_THROWS_AS(bessel_j(cplx{0.0, 1.0}, 0.0), BranchError);
}

TEST_CASE("J for integer orders needs no branch") {
    // J_{-n} = (-1)^n J_n, also on the negative real axis
    for (int n = 1; n <= 4; ++n)
        for (cplx z : {cplx{2, 0}, cplx{-3, 0}, cplx{1, -2}}) {
            const EvalOutput neg = bessel_j(-static_cast<double>(n), z);
            const cplx pos = bessel_j(static_cast<double>(n), z).value;
            check_close(neg.value, (n % 2 ? -1.0 : 1.0) * pos, 1e-10, 1e-13);
            CHECK_FALSE(neg.has(Warning::BranchCutProximity));
        }
}

TEST_CASE("branch cut proximity is flagged for non-integer orders") {
    const EvalOutput a = bessel_j(-0.5, -1.0);
    CHECK(a.has(Warning::BranchCutProximity));
    // arg = pi side: (z/2)^mu with arg z = pi
    check_close(a.value, series_j(-0.5, cplx{-1.0, 0.0}).value, 1e-10);
    const EvalOutput b = bessel_j(-0.5, cplx{-1.0, -0.0});
    CHECK(b.value == a.value);
    CHECK_FALSE(bessel_j(-0.5, cplx{-1.0, 0.1}).has(Warning::BranchCutProximity));
}

TEST_CASE("shifted orders") {
    check_close(bessel_j_shifted(0.3, 4, 2.0).value, series_j(4.3, 2.0).value, 1e-9);
    check_close(bessel_j_shifted(1.0, 2, 5.0).value, 0.3648312306136670, 1e-9);
    const EvalOutput s0 = bessel_j_shifted(0.7, 0, cplx{1, 1});
    const EvalOutput s1 = bessel_j_sin_kernel(0.7, cplx{1, 1});
    CHECK(s0.value == s1.value);
}

TEST_CASE("Fourier coefficients of the sine kernel") {
    for (const auto& c : reference::shifted_tail) {
        const cplx want = 2.0 * pi * principal_pow(c.b / 2.0, -c.a) * c.value;
        check_close(kappa_fourier_coeff(static_cast<long>(c.n), c.a, c.b).value, want, 1e-9, 1e-12);
    }
    const cplx z = 2.0;
    check_close(kappa_fourier_coeff(-3, 0.5, z).value,
                2.0 * pi * principal_pow(z / 2.0, -0.5) * series_j(3.5, z).value, 1e-9);
    check_close(kappa_fourier_coeff(0, 1.5, z).value,
                2.0 * pi * principal_pow(z / 2.0, -1.5) * series_j(1.5, z).value, 1e-9);
    CHECK(std::isfinite(kappa_fourier_coeff(2, 0.5, 0.0).value.real()));
}

TEST_CASE("modified Bessel") {
    for (const auto& c : reference::besseli) {
        INFO("mu=" << c.a << " z=" << c.b);
        check_close(bessel_i(c.a, c.b).value, c.value, 1e-9, 1e-12);
        check_close(bessel_i_kummer(c.a, c.b).value, c.value, 1e-9, 1e-12);
    }
}

TEST_CASE("connection relation in the lower half-plane") {
    for (cplx z : {cplx{1, -1}, cplx{-1, -2}, std::polar(2.0, -pi / 3.0)})
        for (cplx mu : {cplx{0.5, 0}, cplx{-0.5, 0.3}, cplx{3.7, 1}}) {
            const cplx rhs = std::exp(-iu * mu * (pi / 2.0)) * bessel_j(mu, iu * z).value;
            check_close(bessel_i(mu, z).value, rhs, 1e-9, 1e-12);
        }
}

TEST_CASE("integer derivatives") {
    for (const auto& c : reference::besselj_deriv) {
        INFO("mu=" << c.a << " k=" << c.n << " z=" << c.b);
        check_close(bessel_j_deriv(c.a, static_cast<double>(c.n), c.b).value, c.value, 1e-8, 1e-12);
        if (is_nonpositive_integer(1.0 + c.a - static_cast<double>(c.n)))
            CHECK_THROWS_AS(bessel_j_deriv_kummer(c.a, static_cast<double>(c.n), c.b), PoleError);
        else
            check_close(bessel_j_deriv_kummer(c.a, static_cast<double>(c.n), c.b).value, c.value, 1e-8, 1e-12);
    }
}

TEST_CASE("derivative of order zero is the sine kernel bit for bit") {
    const EvalOutput a = bessel_j_deriv(cplx{1.2, 0.3}, 0.0, cplx{2, -1});
    const EvalOutput b = bessel_j_sin_kernel(cplx{1.2, 0.3}, cplx{2, -1});
    CHECK(a.value == b.value);
    CHECK(a.nodes_used == b.nodes_used);
}

TEST_CASE("fractional derivatives") {
    const EvalOutput f = bessel_j_deriv(1.0, 0.5, 2.0);
    CHECK(f.has(Warning::SlowConvergence));
    CHECK(f.nodes_used > QuadratureSpec{}.n_max);
    const cplx fp = bessel_j_deriv(1.0, 0.5 + 1e-4, 2.0).value;
    CHECK(std::abs(fp - f.value) <= 1e-2 * std::max(1.0, std::abs(f.value)));
    CHECK_THROWS_AS(bessel_j_deriv(1.0, -1.0, 2.0), DomainError);
    CHECK_THROWS_AS(bessel_j_deriv(1.0, cplx{-1.5, 1.0}, 2.0), DomainError);
}

TEST_CASE("Kummer kernels reject poles of 1/(1+mu)") {
    CHECK_THROWS_AS(bessel_j_kummer(-1.0, 1.0), PoleError);
    CHECK_THROWS_AS(bessel_i_kummer(-2.0, 1.0), PoleError);
}

TEST_CASE("evaluate dispatch") {
    const OrderArg a{1.0, 2.0};
    CHECK(evaluate(Function::J, Representation::Auto, a).value == bessel_j(1.0, 2.0).value);
    CHECK(evaluate(Function::J, Representation::SinKernel, a).value == bessel_j_sin_kernel(1.0, 2.0).value);
    CHECK(evaluate(Function::I, Representation::Kummer, a).value == bessel_i_kummer(1.0, 2.0).value);
    CHECK_THROWS_AS(evaluate(Function::I, Representation::SinKernel, a), DomainError);
    CHECK_THROWS_AS(evaluate(Function::JDeriv, Representation::CosKernel, a), DomainError);
    CHECK_THROWS_AS(evaluate(Function::Kappa, Representation::Kummer, a), DomainError);

    OrderArg shifted{0.5, 2.0, 0.0, 3};
    check_close(evaluate(Function::J, Representation::Auto, shifted).value, series_j(3.5, 2.0).value, 1e-9);
    check_close(evaluate(Function::J, Representation::SinKernel, shifted).value, series_j(3.5, 2.0).value, 1e-9);
    shifted.n = -2;
    check_close(evaluate(Function::J, Representation::SinKernel, shifted).value, series_j(-1.5, 2.0).value, 1e-9);
}

TEST_CASE("names") {
    CHECK(to_string(Warning::BranchCutProximity) == "BranchCutProximity");
    CHECK(to_string(Warning::SlowConvergence) == "SlowConvergence");
    CHECK(to_string(Warning::CancellationLoss) == "CancellationLoss");
    CHECK(to_string(Function::JDeriv) == "Jderiv");
    CHECK(to_string(Representation::CosKernel) == "cos_kernel");
}

TEST_CASE("fixed-node evaluation converges spectrally") {
    double prev = 0.0;
    for (std::size_t n : {16u, 32u}) {
        const EvalOutput o = evaluate_fixed_nodes(Function::J, Representation::Auto, {0.0, 1.0}, n);
        CHECK(o.nodes_used == n);
        if (n == 32)
            CHECK(o.err_est < prev / 10.0);
        prev = o.err_est;
    }
    const EvalOutput z = evaluate_fixed_nodes(Function::J, Representation::Auto, {0.0, 0.0}, 64);
    CHECK(z.value == cplx{1.0, 0.0});
}

TEST_CASE("error estimate and warnings are consistent, random property") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 40; ++i) {
        const cplx mu = testing::random_disk(rng, 4.0);
        const cplx z = testing::random_disk(rng, 8.0);
        if (std::abs(z) < 0.05)
            continue;
        const EvalOutput o = bessel_j(mu, z);
        const cplx want = series_j(mu, z).value;
        INFO("mu=" << mu << " z=" << z);
        CHECK(o.err_est >= 0.0);
        if (o.warnings.empty())
            check_close(o.value, want, 1e-9, 1e-12);
    }
}

TEST_CASE("determinism") {
    const EvalOutput a = bessel_j(cplx{3.7, 1.0}, std::polar(10.0, pi / 4));
    const EvalOutput b = bessel_j(cplx{3.7, 1.0}, std::polar(10.0, pi / 4));
    CHECK(a.value == b.value);
    CHECK(a.err_est == b.err_est);
}

}
