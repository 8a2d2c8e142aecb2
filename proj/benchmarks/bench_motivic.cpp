#include <benchmark/benchmark.h>

#include "qhilb/hilbert.hpp"
#include "qhilb/motivic.hpp"

namespace {

void BM_AssembledClassSeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qhilb::assembled_class_series(3, order));
}
BENCHMARK(BM_AssembledClassSeries)->Arg(16)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_EulerDecompose(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto a = qhilb::rhs_product_series(2, qhilb::Variable::L, order);
  for (auto _ : state) benchmark::DoNotOptimize(qhilb::euler_decompose(a));
}
BENCHMARK(BM_EulerDecompose)->Arg(16)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace
