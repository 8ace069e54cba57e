#include "besselquad/bessel.hpp"
#include "besselquad/gamma_star.hpp"
#include "besselquad/quadrature.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace besselquad;

namespace {

void BM_GammaStar(benchmark::State& state) {
    const cplx w{static_cast<double>(state.range(0)), 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(gamma_star(cplx{-2.5, 0.3}, w).value);
}
BENCHMARK(BM_GammaStar)->Arg(1)->Arg(10)->Arg(30);

void BM_BesselJ(benchmark::State& state) {
    const cplx z{static_cast<double>(state.range(0)), 0.5};
    for (auto _ : state)
        benchmark::DoNotOptimize(bessel_j(cplx{3.7, 1.0}, z).value);
}
BENCHMARK(BM_BesselJ)->Arg(1)->Arg(10)->Arg(40);

void BM_PeriodicTrapezoid(benchmark::State& state) {
    QuadratureSpec spec;
    spec.n_start = static_cast<std::size_t>(state.range(0));
    spec.n_max = spec.n_start;
    const auto f = [](double t) { return std::exp(cplx{0.0, 2.0 * std::sin(t)}); };
    for (auto _ : state)
        benchmark::DoNotOptimize(periodic_trapezoid(f, spec).value);
}
BENCHMARK(BM_PeriodicTrapezoid)->Arg(64)->Arg(1024);

} // namespace

BENCHMARK_MAIN();
