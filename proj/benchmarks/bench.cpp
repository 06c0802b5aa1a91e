#include <benchmark/benchmark.h>

#include <vector>

#include "gmix/marginals.hpp"
#include "gmix/random.hpp"
#include "gmix/samplers.hpp"
#include "gmix/synthetic.hpp"

using namespace gmix;

namespace {

CompStats make_stats(long n) {
    CompStats s;
    s.n = n;
    s.sum_x = 0.3 * static_cast<double>(n);
    s.sum_x2 = 1.7 * static_cast<double>(n);
    return s;
}

void BM_LogMarginalNig(benchmark::State& state) {
    const CompStats s = make_stats(state.range(0));
    const NigPrior prior{0.01, 0.01, 0.01};
    for (auto _ : state)
        benchmark::DoNotOptimize(log_marginal_nig(s, prior));
}
BENCHMARK(BM_LogMarginalNig)->Arg(10)->Arg(1000);

void BM_LogMarginalJeffreys(benchmark::State& state) {
    const CompStats s = make_stats(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(log_marginal_jeffreys(s));
}
BENCHMARK(BM_LogMarginalJeffreys)->Arg(10)->Arg(1000);

void BM_CategoricalFromLog(benchmark::State& state) {
    RngStream rng(1);
    const std::vector<double> logw{-1.3, -0.2, -2.7, -0.9};
    for (auto _ : state)
        benchmark::DoNotOptimize(rng.categorical_from_log(logw));
}
BENCHMARK(BM_CategoricalFromLog);

// Whole-chain throughput, reported as sweeps per second.
void BM_CollapsedGibbsSweeps(benchmark::State& state) {
    const auto sample = sample_mixture(
        SyntheticSpec::two_component_overlap(state.range(0), 3));
    const auto spec = ModelSpec::modified_jeffreys(2);
    ChainConfig cfg;
    cfg.burn_in = 0;
    cfg.post_burn_in = 2'000;
    cfg.thin = 2'000;
    cfg.seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_collapsed_gibbs(sample.data, spec, cfg));
    state.SetItemsProcessed(state.iterations() * cfg.post_burn_in);
}
BENCHMARK(BM_CollapsedGibbsSweeps)->Arg(100)->Arg(1000);

void BM_DaGibbsSweeps(benchmark::State& state) {
    const auto sample = sample_mixture(
        SyntheticSpec::two_component_overlap(state.range(0), 3));
    const auto spec = ModelSpec::standard_nig(2, {0.1, 0.1, 0.1});
    ChainConfig cfg;
    cfg.sampler = SamplerKind::DaGibbs;
    cfg.burn_in = 0;
    cfg.post_burn_in = 2'000;
    cfg.thin = 2'000;
    cfg.seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_da_gibbs(sample.data, spec, cfg));
    state.SetItemsProcessed(state.iterations() * cfg.post_burn_in);
}
BENCHMARK(BM_DaGibbsSweeps)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
