// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "lppqs/probability.hpp"
#include "lppqs/series.hpp"

using namespace lppqs;

namespace {

GeometricSpec hlr_spec(std::size_t n) { return GeometricSpec{Geometry(GeometryKind::p2hlr, n), Rational(7, 10), 1}; }

void BM_SampleSerial(benchmark::State& state) {
  const auto spec = hlr_spec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample_lpp_times_serial(spec, 2000));
  state.SetItemsProcessed(state.iterations() * 2000);
}

void BM_SampleOpenMP(benchmark::State& state) {
  const auto spec = hlr_spec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample_lpp_times(spec, 2000));
  state.SetItemsProcessed(state.iterations() * 2000);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_SeriesSerial(benchmark::State& state) {
  const Geometry g(GeometryKind::p2hlr, 3);
  for (auto _ : state) benchmark::DoNotOptimize(generating_series_serial(g, static_cast<int>(state.range(0))));
}

void BM_SeriesOpenMP(benchmark::State& state) {
  const Geometry g(GeometryKind::p2hlr, 3);
  for (auto _ : state) benchmark::DoNotOptimize(generating_series(g, static_cast<int>(state.range(0))));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_SampleSerial)->Arg(10)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleOpenMP)->Arg(10)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeriesSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeriesOpenMP)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
