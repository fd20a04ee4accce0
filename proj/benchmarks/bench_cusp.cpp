#include <benchmark/benchmark.h>

#include <numbers>

#include "hypmass/cusp_mass.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

void BM_WhittakerNorm(benchmark::State& state) {
  const auto p = hypmass::SpectralParam::from_s(0.75);
  const auto annulus = hypmass::Annulus::make(2 * kPi, 8 * kPi);
  for (auto _ : state)
    benchmark::DoNotOptimize(hypmass::cusp::whittaker_norm_sq(p, static_cast<int>(state.range(0)), annulus));
}
BENCHMARK(BM_WhittakerNorm)->Arg(1)->Arg(8);

void BM_KHatSweep(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(hypmass::cusp::sweep_k_hat({4 * kPi, 8 * kPi, 16 * kPi, 32 * kPi}));
}
BENCHMARK(BM_KHatSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
