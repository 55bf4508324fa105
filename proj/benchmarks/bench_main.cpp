#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "fuzzyfrac/frac_calc.hpp"
#include "fuzzyfrac/gh_arith.hpp"
#include "fuzzyfrac/hybrid_solver.hpp"

using namespace fuzzyfrac;

namespace {

FuzzyNumber random_number(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> d(0.0, 1.0);
    double a = d(rng), b = a + d(rng), c = b + d(rng), e = c + d(rng);
    return FuzzyNumber::trapezoid(a, b, c, e, AlphaGrid::uniform(n));
}

}  // namespace

static void BM_GhDiff(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto u = random_number(rng, n), v = random_number(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(gh_diff(u, v));
}
BENCHMARK(BM_GhDiff)->Arg(10)->Arg(100)->Arg(1000);

static void BM_LsqGhDiff(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto u = random_number(rng, n), v = random_number(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(lsq_gh_diff(u, v));
}
BENCHMARK(BM_LsqGhDiff)->Arg(10)->Arg(100)->Arg(1000);

// quadratic in the number of samples
static void BM_RlIntegralSeries(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto f = SampledFunction::sample([](double s) { return std::exp(s); }, 0.0, 1.0, m);
    for (auto _ : state) benchmark::DoNotOptimize(rl_integral_series(f, 0.5));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RlIntegralSeries)->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared);

static void BM_Solve(benchmark::State& state) {
    HybridProblem p;
    p.f = [](double, double x) { return 1.0 + 0.05 * x; };
    p.g = [](double, double) { return -1.0; };
    p.u0 = FuzzyNumber::triangular(-3, -2, -1, AlphaGrid::uniform(static_cast<std::size_t>(state.range(0))));
    p.steps = 200;
    for (auto _ : state) benchmark::DoNotOptimize(solve(p));
}
BENCHMARK(BM_Solve)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
