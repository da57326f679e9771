#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "trigspline/error_analysis.hpp"
#include "trigspline/grid.hpp"
#include "trigspline/optimizer.hpp"
#include "trigspline/phantom.hpp"
#include "trigspline/spline.hpp"

namespace {

using namespace trigspline;

SampleSet wavy_samples(int m) {
  const CircleGrid g = make_grid(m);
  std::vector<double> y(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) y[(size_t)i] = std::sin(1.7 * g.node(i)) + 0.2 * i;
  return SampleSet(g, std::move(y), m);
}

void BM_dft_odd(benchmark::State& state) {
  const SampleSet samples = wavy_samples(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dft_odd(samples));
}
BENCHMARK(BM_dft_odd)->Arg(9)->Arg(33)->Arg(101);

void BM_build_spline(benchmark::State& state) {
  const SampleSet samples = wavy_samples(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_spline(samples, 3));
}
BENCHMARK(BM_build_spline)->Arg(9)->Arg(33)->Arg(101);

void BM_eval_closed(benchmark::State& state) {
  const TrigSpline sp = build_spline(wavy_samples(static_cast<int>(state.range(0))), 3);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sp.value(t));
    t += 0.01;
  }
}
BENCHMARK(BM_eval_closed)->Arg(9)->Arg(101);

void BM_eval_literal(benchmark::State& state) {
  // even order: literal truncated alias summation
  const TrigSpline sp = build_spline(wavy_samples(9), 4);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sp.value(t));
    t += 0.01;
  }
}
BENCHMARK(BM_eval_literal);

void BM_relative_error(benchmark::State& state) {
  const SourceFunction f = builtin_source("sine75");
  const TrigSpline sp = build_spline(place_on_circle(sample_source(f, 9), 0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(relative_error(sp, f, 9, 2001));
}
BENCHMARK(BM_relative_error);

void BM_phantom_objective(benchmark::State& state) {
  const SourceFunction f = builtin_source("sine75");
  const auto objective = make_phantom_objective(f, 9, 1, 3);
  const std::vector<double> v{0.4, -0.2};
  for (auto _ : state) benchmark::DoNotOptimize(objective(v));
}
BENCHMARK(BM_phantom_objective);

void BM_table_row(benchmark::State& state) {
  const SourceFunction f = builtin_source("exp02");
  const int ks[] = {1};
  for (auto _ : state) benchmark::DoNotOptimize(run_table(f, 9, ks, 3, 501));
}
BENCHMARK(BM_table_row);

void BM_optimize(benchmark::State& state) {
  const SourceFunction f = builtin_source("sine75");
  const auto data = sample_source(f, 9);
  PhantomConfig cfg{.pairs = 1, .match_order = 2,
                    .source = DerivativeSource::divided_difference};
  const SampleSet filled = fill_phantom(place_on_circle(data, 1), cfg, &f);
  SearchSpec spec;
  spec.initial.assign(filled.values().begin() + 9, filled.values().end());
  spec.box_halfwidth.assign(2, 10.0);
  spec.resolution = 0.02;
  spec.objective = make_phantom_objective(f, 9, 1, 3, 501);
  for (auto _ : state) benchmark::DoNotOptimize(optimize_phantom(spec));
}
BENCHMARK(BM_optimize);

}  // namespace

BENCHMARK_MAIN();
