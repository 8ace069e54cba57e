#include "besselquad/errors.hpp"
#include "besselquad/numerics.hpp"
#include "besselquad/summation.hpp"
#include "check.hpp"
#include "reference_values.hpp"

#include <doctest.h>

#include <limits>
#include <vector>

using namespace besselquad;
using testing::check_close;

TEST_SUITE("numerics") {

TEST_CASE("gamma_fn matches reference values") {
    for (const auto& c : reference::gamma)
        check_close(gamma_fn(c.a), c.value, 1e-13);
}

TEST_CASE("gamma_fn small cases") {
    check_close(gamma_fn(1.0), 1.0, 1e-15);
    check_close(gamma_fn(5.0), 24.0, 1e-14);
    check_close(gamma_fn(0.5), std::sqrt(pi), 1e-14);
    check_close(gamma_fn(-0.5), -2.0 * std::sqrt(pi), 1e-14);
}

TEST_CASE("gamma_fn poles") {
    for (double s : {0.0, -1.0, -2.0, -17.0})
        CHECK_THROWS_AS(gamma_fn(s), PoleError);
}

TEST_CASE("recip_gamma is exactly zero at poles and finite elsewhere") {
    for (double s : {0.0, -1.0, -5.0, -30.0}) {
        const cplx r = recip_gamma(s);
        CHECK(r.real() == 0.0);
        CHECK(r.imag() == 0.0);
    }
    check_close(recip_gamma(-0.5), -1.0 / (2.0 * std::sqrt(pi)), 1e-14);
}

TEST_CASE("gamma functional equation, random property") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const cplx s = testing::random_disk(rng, 25.0);
        if (is_nonpositive_integer(s) || std::abs(s - std::round(s.real())) < 0.05)
            continue;
        check_close(recip_gamma(s + 1.0) * s, recip_gamma(s), 1e-12, 1e-300);
    }
}

TEST_CASE("beta_fn") {
    check_close(beta_fn(3.0, 1.0), 1.0 / 3.0, 1e-14);
    check_close(beta_fn(0.5, 0.5), pi, 1e-14);
    CHECK_THROWS_AS(beta_fn(-1.0, 2.0), PoleError);
    CHECK_THROWS_AS(beta_fn(2.0, 0.0), PoleError);
}

TEST_CASE("sin_pi has exact zeros") {
    for (double n : {-3.0, 0.0, 1.0, 40.0})
        CHECK(sin_pi(n) == cplx{0.0, 0.0});
    check_close(sin_pi(0.5), 1.0, 1e-15);
}

TEST_CASE("as_integer and is_nonpositive_integer") {
    CHECK(as_integer(cplx{3.0, 0.0}) == 3);
    CHECK(as_integer(cplx{-2.0, 0.0}) == -2);
    CHECK_FALSE(as_integer(cplx{3.0, 1e-300}).has_value());
    CHECK_FALSE(as_integer(cplx{2.5, 0.0}).has_value());
    CHECK(is_nonpositive_integer(0.0));
    CHECK(is_nonpositive_integer(-4.0));
    CHECK_FALSE(is_nonpositive_integer(1.0));
    CHECK_FALSE(is_nonpositive_integer(cplx{-1.0, 1e-12}));
}

TEST_CASE("principal branch conventions") {
    CHECK(principal_arg(cplx{-1.0, 0.0}) == doctest::Approx(pi));
    CHECK(principal_arg(cplx{-1.0, -0.0}) == doctest::Approx(pi));
    CHECK(principal_arg(cplx{0.0, -1.0}) == doctest::Approx(-pi / 2));
    check_close(principal_log(cplx{-2.0, -0.0}), cplx{std::log(2.0), pi}, 1e-15);
    CHECK_THROWS_AS(principal_log(0.0), BranchError);

    // (-1)^{1/2} = i on the arg = pi side
    check_close(principal_pow(-1.0, 0.5), cplx{0.0, 1.0}, 1e-15, 1e-15);
    check_close(principal_pow(cplx{-1.0, -0.0}, 0.5), cplx{0.0, 1.0}, 1e-15, 1e-15);
}

TEST_CASE("principal_pow at zero base") {
    CHECK(principal_pow(0.0, 0.0) == cplx{1.0, 0.0});
    CHECK(principal_pow(0.0, cplx{0.5, 3.0}) == cplx{0.0, 0.0});
    CHECK_THROWS_AS(principal_pow(0.0, -0.5), BranchError);
    CHECK_THROWS_AS(principal_pow(0.0, cplx{0.0, 1.0}), BranchError);
}

TEST_CASE("integer powers are single-valued") {
    const cplx z{-3.0, -0.0};
    CHECK(principal_pow(z, 3.0) == cplx{-27.0, 0.0} * 1.0);
    check_close(int_pow(cplx{2.0, 1.0}, 3), cplx{2.0, 11.0}, 1e-15);
    check_close(int_pow(cplx{0.5, 0.0}, -4), 16.0, 1e-15);
    CHECK(int_pow(cplx{7.0, 2.0}, 0) == cplx{1.0, 0.0});
}

TEST_CASE("principal_pow agrees with exp(a log z), random property") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const cplx z = testing::random_disk(rng, 5.0);
        const cplx a = testing::random_disk(rng, 4.0);
        if (std::abs(z) < 1e-3)
            continue;
        check_close(principal_pow(z, a), std::exp(a * std::log(z)), 1e-12);
    }
}

TEST_CASE("Neumaier summation recovers lost low-order bits") {
    NeumaierSum s;
    s.add(1.0);
    s.add(1e100);
    s.add(1.0);
    s.add(-1e100);
    CHECK(s.value() == 2.0);

    ComplexNeumaierSum c;
    c.add(cplx{1e16, 1.0});
    c.add(cplx{1.0, 1e16});
    c.add(cplx{-1e16, -1e16});
    CHECK(c.value() == cplx{1.0, 1.0});
}

TEST_CASE("Neumaier summation is order-deterministic") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> d(0.0, 1e6);
    std::vector<double> xs(10000);
    for (double& x : xs)
        x = d(rng);
    NeumaierSum a, b;
    for (double x : xs)
        a.add(x);
    for (double x : xs)
        b.add(x);
    CHECK(a.value() == b.value());
}

}
