#include <benchmark/benchmark.h>

#include "qhilb/ydiag.hpp"

namespace {

void BM_EnumeratePartitions(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qhilb::enumerate_partitions(n));
}
BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(30)->Arg(40);

void BM_LhsSeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qhilb::lhs_hstat_series({3, 2}, order));
}
BENCHMARK(BM_LhsSeries)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
