#include <benchmark/benchmark.h>

#include "dpm/combiner.hpp"
#include "dpm/numeric.hpp"
#include "dpm/power.hpp"
#include "dpm/ski_rental.hpp"

namespace {

void BM_build_cdf(benchmark::State& state) {
    const double mu = dpm::mu_of_rho(1.16);
    double tau = 0.0;
    for (auto _ : state) {
        tau += 0.001;
        if (tau > 3.0) tau = 0.0;
        benchmark::DoNotOptimize(dpm::build_cdf_unchecked(1.16, mu, tau));
    }
}
BENCHMARK(BM_build_cdf);

void BM_expected_cost(benchmark::State& state) {
    const auto d = dpm::build_cdf(1.16, dpm::mu_of_rho(1.16), 0.7);
    double x = 0.0;
    for (auto _ : state) {
        x += 0.01;
        if (x > 5.0) x = 0.0;
        benchmark::DoNotOptimize(dpm::expected_cost(d, x));
    }
}
BENCHMARK(BM_expected_cost);

void BM_expected_period_cost(benchmark::State& state) {
    const auto pol = dpm::build_policy(dpm::ibm_system(), 1.16,
                                       dpm::mu_of_rho(1.16), 1.0);
    double len = 0.0;
    for (auto _ : state) {
        len += 0.01;
        if (len > 8.0) len = 0.0;
        benchmark::DoNotOptimize(dpm::expected_period_cost(pol, len));
    }
}
BENCHMARK(BM_expected_period_cost);

void BM_prudent_period_cost(benchmark::State& state) {
    const auto pol = dpm::build_policy(dpm::ibm_system(), 1.16,
                                       dpm::mu_of_rho(1.16), 1.0);
    double len = 0.0;
    for (auto _ : state) {
        len += 0.1;
        if (len > 8.0) len = 0.1;
        benchmark::DoNotOptimize(dpm::expected_prudent_period_cost(pol, len));
    }
}
BENCHMARK(BM_prudent_period_cost);

void BM_combiner_step(benchmark::State& state) {
    auto s = dpm::combiner_init(16, 0.02);
    const std::vector<double> costs(16, 1.0);
    for (auto _ : state) {
        dpm::combiner_step(s, costs);
        benchmark::DoNotOptimize(s.w[0]);
    }
}
BENCHMARK(BM_combiner_step);

}  // namespace

BENCHMARK_MAIN();
