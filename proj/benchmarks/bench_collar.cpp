#include <benchmark/benchmark.h>

#include "hypmass/collar_modes.hpp"

namespace {

void BM_SolveMode(benchmark::State& state) {
  const hypmass::ModeODE ode{hypmass::CollarGeometry(1e-2), hypmass::SpectralParam::from_lambda(0.16),
                             static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(hypmass::solve_mode(ode, hypmass::ModeKind::c));
}
BENCHMARK(BM_SolveMode)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CollarLemma(benchmark::State& state) {
  const hypmass::CollarGeometry geom(1e-2);
  const auto param = hypmass::SpectralParam::from_lambda(0.16);
  for (auto _ : state)
    benchmark::DoNotOptimize(hypmass::verify_collar_lemma(geom, param, 4, 0.1, 0.09));
}
BENCHMARK(BM_CollarLemma)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
