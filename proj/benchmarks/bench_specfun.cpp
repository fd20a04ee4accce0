#include <benchmark/benchmark.h>

#include "hypmass/specfun.hpp"

namespace {

void BM_McDonaldK(benchmark::State& state) {
  const double y = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hypmass::specfun::mcdonald_k(0.25, y));
}
BENCHMARK(BM_McDonaldK)->Arg(1)->Arg(5)->Arg(50)->Arg(700);

void BM_KSplit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hypmass::specfun::k_split(0.1, 10.0));
}
BENCHMARK(BM_KSplit);

void BM_WhittakerRadial(benchmark::State& state) {
  const auto p = hypmass::SpectralParam::from_s(0.75);
  for (auto _ : state) benchmark::DoNotOptimize(hypmass::specfun::whittaker_radial(p, 3, 2.0));
}
BENCHMARK(BM_WhittakerRadial);

}  // namespace

BENCHMARK_MAIN();
