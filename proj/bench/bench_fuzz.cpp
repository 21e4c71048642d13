// Serial vs OpenMP fuzz kernels on the same configuration.
#include <benchmark/benchmark.h>

#include "mqlogic/fuzz.hpp"

using namespace mqlogic;

namespace {

FuzzConfig config(const benchmark::State& st) {
  FuzzConfig c;
  c.rule = fuzzable_rules()[static_cast<std::size_t>(st.range(0))];
  c.mode = QuantifierMode::Sum;
  c.samples = static_cast<std::size_t>(st.range(1));
  c.seed = 20240601;
  return c;
}

void BM_FuzzSerial(benchmark::State& st) {
  const FuzzConfig c = config(st);
  for (auto _ : st) benchmark::DoNotOptimize(fuzz_rule_serial(c).informative);
  st.SetLabel(to_string(c.rule));
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations()) * st.range(1));
}

void BM_FuzzParallel(benchmark::State& st) {
  const FuzzConfig c = config(st);
  for (auto _ : st) benchmark::DoNotOptimize(fuzz_rule_parallel(c).informative);
  st.SetLabel(to_string(c.rule));
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations()) * st.range(1));
}

// CondL, ExistsLw, ExistsRw
void rules(benchmark::internal::Benchmark* b) {
  for (int r : {3, 5, 6}) b->Args({r, 2000});
}

}  // namespace

BENCHMARK(BM_FuzzSerial)->Apply(rules)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FuzzParallel)->Apply(rules)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
