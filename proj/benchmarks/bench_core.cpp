#include <hexcount/formulas.hpp>
#include <hexcount/matchcount.hpp>
#include <hexcount/pathdet.hpp>
#include <hexcount/polyfactor.hpp>

#include <benchmark/benchmark.h>

using namespace hexcount;

static void BM_SweepCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto region = geometry::remove_axis_defect({n, n, n / 2});
  for (auto _ : state) benchmark::DoNotOptimize(matchcount::count_tilings(region));
  state.counters["triangles"] = static_cast<double>(region.size());
}
BENCHMARK(BM_SweepCount)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_LowerHalfWeighted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto lower = geometry::split_halves({n, 2 * n, n / 2}).lower;
  for (auto _ : state) benchmark::DoNotOptimize(matchcount::count_tilings(lower));
}
BENCHMARK(BM_LowerHalfWeighted)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_DetA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = pathdet::matrix_A(n, n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(pathdet::det_exact(a));
}
BENCHMARK(BM_DetA)->RangeMultiplier(2)->Range(4, 64);

static void BM_PolyDetB(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polyfactor::poly_det_B(n, 1));
}
BENCHMARK(BM_PolyDetB)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

static void BM_EvenProduct(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(formulas::theorem1_count(2 * t, t, t));
}
BENCHMARK(BM_EvenProduct)->RangeMultiplier(2)->Range(4, 64);

BENCHMARK_MAIN();
