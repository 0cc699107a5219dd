// Band sweep: OpenMP kernel against its serial reference.
//   ./sweep_bench --benchmark_filter=Sweep

#include <benchmark/benchmark.h>

#include "jacobi2d/coefficients.hpp"
#include "jacobi2d/spectrum.hpp"

namespace {

using namespace jacobi2d;

CoefficientField bench_field(int p) {
  RawCoefficients raw = to_raw(example_shifted_schrodinger(p, p));
  // Nonzero a0 and a1 so every corner block is populated.
  for (int n = 0; n < p; ++n) {
    for (int m = 0; m < p; ++m) {
      raw.a0[n][m] = Complex{0.3 + 0.01 * n, -0.2 + 0.01 * m};
      raw.a1[n][m] = Complex{0.5, 0.1 * (n - m)};
    }
  }
  return validate(raw);
}

void BM_SweepParallel(benchmark::State& state) {
  const CoefficientField f = bench_field(static_cast<int>(state.range(0)));
  const MomentumGrid grid(static_cast<int>(state.range(1)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_bands(f, grid));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.points()));
}

void BM_SweepSerial(benchmark::State& state) {
  const CoefficientField f = bench_field(static_cast<int>(state.range(0)));
  const MomentumGrid grid(static_cast<int>(state.range(1)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_bands_serial(f, grid));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.points()));
}

}  // namespace

BENCHMARK(BM_SweepParallel)->Args({3, 32})->Args({6, 16})->Args({10, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Args({3, 32})->Args({6, 16})->Args({10, 8})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
