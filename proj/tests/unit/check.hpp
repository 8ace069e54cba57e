#ifndef BESSELQUAD_TESTS_CHECK_HPP
#define BESSELQUAD_TESTS_CHECK_HPP

#include "besselquad/numerics.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

namespace testing {

using besselquad::cplx;

/// |got - want| <= rtol |want| + atol, with a readable failure message.
inline void check_close(cplx got, cplx want, double rtol, double atol = 0.0) {
    const double err = std::abs(got - want);
    INFO("got " << got << " want " << want << " err " << err);
    CHECK(err <= rtol * std::abs(want) + atol);
}

inline cplx random_disk(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = radius * std::sqrt(u(rng));
    return std::polar(r, besselquad::pi * (2.0 * u(rng) - 1.0));
}

} // namespace testing

#endif // BESSELQUAD_TESTS_CHECK_HPP
