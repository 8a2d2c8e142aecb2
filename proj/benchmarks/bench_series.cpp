#include <benchmark/benchmark.h>

#include "qhilb/hilbert.hpp"
#include "qhilb/series.hpp"

namespace {

void BM_RhsProduct(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qhilb::rhs_product_series(3, qhilb::Variable::q, order));
  }
}
BENCHMARK(BM_RhsProduct)->Arg(16)->Arg(30)->Arg(60);

void BM_SeriesInverse(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto a = qhilb::rhs_product_series(2, qhilb::Variable::L, order);
  for (auto _ : state) benchmark::DoNotOptimize(qhilb::series_inverse(a));
}
BENCHMARK(BM_SeriesInverse)->Arg(16)->Arg(30)->Arg(60);

}  // namespace
