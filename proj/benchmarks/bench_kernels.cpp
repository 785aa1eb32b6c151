#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "oftt/cases.hpp"
#include "oftt/ec_flux.hpp"
#include "oftt/eigensystem.hpp"
#include "oftt/scheme.hpp"

namespace {

using namespace oftt;

std::vector<Prim> random_states(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> rho(0.2, 3.0), vel(-1.5, 1.5), p(0.05, 2.0);
    std::vector<Prim> out(n);
    for (Prim& w : out) w = {rho(rng), vel(rng), vel(rng), p(rng), p(rng)};
    return out;
}

void BM_ec_flux(benchmark::State& state) {
    const GasParams g{1.4, 1.67};
    const auto w = random_states(1024, 7);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ec_flux(w[i], w[i + 1], g, Axis::X));
        i = (i + 1) % (w.size() - 1);
    }
}
BENCHMARK(BM_ec_flux);

void BM_scaled_eigenvectors(benchmark::State& state) {
    const GasParams g{1.4, 1.67};
    const auto w = random_states(1024, 11);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(scaled_eigenvectors(w[i], g, Axis::X));
        i = (i + 1) % w.size();
    }
}
BENCHMARK(BM_scaled_eigenvectors);

void BM_compute_rhs_1d(benchmark::State& state) {
    const CaseSpec spec = case_spec("sod");
    Field f = init_case(spec, static_cast<int>(state.range(0)), 1);
    SchemeConfig cfg{static_cast<int>(state.range(1)), false};
    std::vector<Vec5> dudt;
    for (auto _ : state) {
        compute_rhs(f, spec.gas, cfg, dudt);
        benchmark::DoNotOptimize(dudt.data());
    }
}
BENCHMARK(BM_compute_rhs_1d)->Args({2000, 2})->Args({2000, 4});

void BM_compute_rhs_2d(benchmark::State& state) {
    const CaseSpec spec = case_spec("riemann2d");
    const int n = static_cast<int>(state.range(0));
    Field f = init_case(spec, n, n);
    SchemeConfig cfg{static_cast<int>(state.range(1)), false};
    std::vector<Vec5> dudt;
    for (auto _ : state) {
        compute_rhs(f, spec.gas, cfg, dudt);
        benchmark::DoNotOptimize(dudt.data());
    }
}
BENCHMARK(BM_compute_rhs_2d)->Args({64, 2})->Args({64, 4});

}  // namespace

BENCHMARK_MAIN();
