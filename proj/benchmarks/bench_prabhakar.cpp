#include "prabhakar/prabhakar.hpp"

#include <benchmark/benchmark.h>

using namespace prabhakar;

namespace {

const parameter_triple kTriple(0.7, 0.9, 1.1);

void BM_series_small_t(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(ml3_series(kTriple, -0.8).value);
}
BENCHMARK(BM_series_small_t);

void BM_contour_inversion(benchmark::State& state)
{
    const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(eval_e_ilt(kTriple, 5.0, tol).value);
}
BENCHMARK(BM_contour_inversion)->Arg(6)->Arg(10)->Arg(13);

void BM_spectral_quadrature(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(eval_e_spectral(kTriple, 5.0, 1e-10).value);
}
BENCHMARK(BM_spectral_quadrature);

void BM_spectral_density_curve(benchmark::State& state)
{
    std::vector<double> grid(2000);
    for (size_t i = 0; i < grid.size(); ++i)
        grid[i] = std::exp(std::log(1e-3) + i * (std::log(1e3) - std::log(1e-3)) / 1999.0);
    const parameter_triple p(0.75, 0.9, 1.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_spectral_curve(p, grid).min_value);
}
BENCHMARK(BM_spectral_density_curve);

void BM_derivative_suite(benchmark::State& state)
{
    for (auto _ : state)
        for (int k = 0; k <= 5; ++k)
            benchmark::DoNotOptimize(derivative(parameter_triple(0.7, 0.91, 1.3), 10.0, k).value);
}
BENCHMARK(BM_derivative_suite);

} // namespace

BENCHMARK_MAIN();
