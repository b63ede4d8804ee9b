#include <benchmark/benchmark.h>

#include "kaonbell/lr.hpp"
#include "kaonbell/mc.hpp"
#include "kaonbell/scan.hpp"

using namespace kaonbell;

namespace {

const DecayParams kP = DecayParams::defaults();

void BM_PairStateTable(benchmark::State& state) {
  const auto model = feasibility_box(kP, 0.5, 1.0).midpoint();
  for (auto _ : state) benchmark::DoNotOptimize(pair_state_table(kP, model, 0.5, 1.0));
}
BENCHMARK(BM_PairStateTable);

void BM_LRAsymmetry(benchmark::State& state) {
  const auto model = feasibility_box(kP, 0.55, 1.92).lower_corner();
  for (auto _ : state) benchmark::DoNotOptimize(lr_asymmetry(kP, model, 0.55, 1.92));
}
BENCHMARK(BM_LRAsymmetry);

void BM_DiscrepancyScan(benchmark::State& state) {
  ScanSpec spec;
  spec.steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asymmetry_discrepancy_scan(kP, spec));
}
BENCHMARK(BM_DiscrepancyScan)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_WignerScan(benchmark::State& state) {
  ScanSpec spec;
  spec.variable = ScanVariable::WignerTau;
  for (auto _ : state) benchmark::DoNotOptimize(wigner_scan(kP, spec));
}
BENCHMARK(BM_WignerScan)->Unit(benchmark::kMillisecond);

void BM_ChshScan(benchmark::State& state) {
  ScanSpec spec;
  spec.variable = ScanVariable::ChshTau;
  for (auto _ : state) benchmark::DoNotOptimize(chsh_scan(kP, spec, CHSHConfig{}));
}
BENCHMARK(BM_ChshScan)->Unit(benchmark::kMillisecond);

void BM_Sampler(benchmark::State& state) {
  SamplerConfig cfg;
  cfg.seed = 1;
  cfg.n_samples = static_cast<std::uint64_t>(state.range(0));
  cfg.tau1 = 0.5;
  cfg.tau2 = 1.0;
  cfg.model = feasibility_box(kP, 0.5, 1.0).midpoint();
  for (auto _ : state) benchmark::DoNotOptimize(sample_pairs(kP, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sampler)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
