// Microbenchmarks for the numerically heavy paths: half-line quadrature,
// amplitude evaluation in both arithmetic regimes, conversion tables and
// the end-to-end detection ratios.

#include <benchmark/benchmark.h>

#include <cmath>

#include "oam/detection.hpp"
#include "oam/hologram.hpp"
#include "oam/quadrature.hpp"
#include "oam/spdc.hpp"

namespace {

void BM_HalflineGaussian(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oam::integrate_halfline(
        [](double u) { return std::exp(-u * u); }));
  }
}
BENCHMARK(BM_HalflineGaussian);

void BM_AmplitudeClosedForm(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oam::amplitude_closed_form(l, p, -l, p, 0));
  }
}
BENCHMARK(BM_AmplitudeClosedForm)
    ->Args({1, 0})
    ->Args({2, 2})
    ->Args({6, 4})
    ->Args({25, 4}); // last one exercises the log-domain path

void BM_AmplitudeQuadrature(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const oam::PumpSpec pump;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oam::amplitude_quadrature(l, 1, -l, 1, pump));
  }
}
BENCHMARK(BM_AmplitudeQuadrature)->Arg(1)->Arg(3);

void BM_ConversionTable(benchmark::State& state) {
  const int delta_l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oam::conversion_table(delta_l, 2, 3));
  }
}
BENCHMARK(BM_ConversionTable)->Arg(1)->Arg(2);

void BM_DetectionReport(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oam::build_detection_report({0, 1, 2}));
  }
}
BENCHMARK(BM_DetectionReport);

} // namespace

BENCHMARK_MAIN();
