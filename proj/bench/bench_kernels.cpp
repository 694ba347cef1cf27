#include <vector>

#include <benchmark/benchmark.h>

#include "zhuk/kernels.hpp"
#include "zhuk/sweep.hpp"

namespace {

using zhuk::kernels::Exec;

const zhuk::ZhukovskyParams kParams = zhuk::derive_params({1.0, 2.0, 2.0}, {1.0, 1.0, 0.0});

void BM_SphereField(benchmark::State& state, Exec exec) {
  const int rows = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zhuk::kernels::sphere_field(kParams, 4.16, rows, exec));
  }
  state.SetItemsProcessed(state.iterations() * (rows + 1) * 2 * rows);
}
BENCHMARK_CAPTURE(BM_SphereField, serial, Exec::serial)->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(BM_SphereField, parallel, Exec::parallel)->Arg(256)->Arg(1024);

void BM_CurveValues(benchmark::State& state, Exec exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> t(n), h(n), f(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = 0.5 + 0.5 * static_cast<double>(i) / static_cast<double>(n);
  for (auto _ : state) {
    if (exec == Exec::serial) {
      zhuk::kernels::curve_values_serial(kParams, t, h, f);
    } else {
      zhuk::kernels::curve_values_parallel(kParams, t, h, f);
    }
    benchmark::DoNotOptimize(h.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_CurveValues, serial, Exec::serial)->Arg(1 << 16);
BENCHMARK_CAPTURE(BM_CurveValues, parallel, Exec::parallel)->Arg(1 << 16);

void BM_Sweep(benchmark::State& state, Exec exec) {
  zhuk::SweepGrid grid;
  grid.A1 = {0.5, 1.0, 1.5, 3.0};
  grid.lambda1 = {0.25, 0.5, 1.0, 2.0, 4.0};
  grid.lambda2 = {0.25, 0.5, 1.0, 2.0, 4.0};
  grid.b_fractions = {0.0, 0.3, -0.3, 0.9, -0.9};
  const auto points = zhuk::expand_grid(grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zhuk::sweep(points, exec));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(points.size()));
}
BENCHMARK_CAPTURE(BM_Sweep, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
