#include <benchmark/benchmark.h>

#include <complex>

#include "wwspdc/bell_analysis.hpp"
#include "wwspdc/detection_rates.hpp"
#include "wwspdc/fock_oracle.hpp"
#include "wwspdc/gaussian_modes.hpp"
#include "wwspdc/ww_algebra.hpp"

namespace {

using namespace wwspdc;

void BM_VacuumSample(benchmark::State& state) {
  const VacuumSampler sampler = sample_vacuum(SamplerConfig{1, 1 << 20, 2});
  std::int64_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.at(k));
    k = (k + 1) & ((1 << 20) - 1);
  }
}
BENCHMARK(BM_VacuumSample);

void BM_McCoincidence(benchmark::State& state) {
  const VacuumSampler sampler =
      sample_vacuum(SamplerConfig{1, state.range(0), 100});
  const AnalyzerAngles angles(0.3, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_coincidence(sampler, {0.1, 0.0}, angles,
                                            Convention::stochastic_model));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McCoincidence)->Arg(100'000);

void BM_WeylSymbolLength6(benchmark::State& state) {
  OperatorWord w;
  for (int k = 0; k < 3; ++k) {
    w.factors.push_back({Mode::s, Ladder::create});
    w.factors.push_back({Mode::s, Ladder::annihilate});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(weyl_symbol(w));
  }
}
BENCHMARK(BM_WeylSymbolLength6);

void BM_FockCoincidence(benchmark::State& state) {
  const TruncatedSpace space(static_cast<int>(state.range(0)));
  const AnalyzerAngles angles(0.4, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coincidence_rate(space, {0.1, 0.0}, angles));
  }
}
BENCHMARK(BM_FockCoincidence)->Arg(3)->Arg(4);

void BM_ChEvaluateMc(benchmark::State& state) {
  const VacuumSampler sampler = sample_vacuum(SamplerConfig{1, 100'000, 100});
  const McRateSource source(sampler, {0.1, 0.0}, Convention::stochastic_model);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ch_evaluate(source, standard_setting()));
  }
}
BENCHMARK(BM_ChEvaluateMc);

}  // namespace

BENCHMARK_MAIN();
