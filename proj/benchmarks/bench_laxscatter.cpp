#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "laxscatter/hardy.hpp"
#include "laxscatter/inner.hpp"
#include "laxscatter/laguerre.hpp"
#include "laxscatter/pipeline.hpp"
#include "laxscatter/shift_calculus.hpp"

namespace {

using namespace laxscatter;
using namespace std::complex_literals;

UpperInner mixed_inner() {
  return UpperInner({1.0 + 1.0i, 2.0i, -0.5 + 0.3i, 0.25 + 3.0i}, 0.5, {{1.5337, 0.25}, {-2.0713, 0.5}});
}

void BM_EvalRatioGrid(benchmark::State& state) {
  const auto ratio = make_ratio(mixed_inner());
  const auto n = static_cast<int>(state.range(0));
  std::vector<cplx> grid;
  for (int j = 0; j < n; ++j) grid.emplace_back(-3.0 + 6.0 * j / n, -0.1 - 2.9 * ((j * 7) % n) / n);
  for (auto _ : state) {
    cplx acc = 0.0;
    for (cplx z : grid) acc += eval_ratio(ratio, z);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_EvalRatioGrid)->Arg(1 << 10)->Arg(1 << 14);

void BM_DiskSymbol(benchmark::State& state) {
  const auto psi = UpperInner::blaschke({2.0i, 1.0 + 1.5i, -0.5 + 2.0i});
  for (auto _ : state) benchmark::DoNotOptimize(disk_symbol_of(psi, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DiskSymbol)->RangeMultiplier(4)->Range(64, 4096);

void BM_IsometryDefect(benchmark::State& state) {
  const auto t = toeplitz_of(disk_symbol_of(UpperInner::blaschke({2.0i}), static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(isometry_defect(t, static_cast<int>(state.range(0)) / 4));
}
BENCHMARK(BM_IsometryDefect)->Arg(128)->Arg(256)->Arg(512);

void BM_ExpandPotential(benchmark::State& state) {
  PotentialSpec p;
  for (int j = 0; j <= state.range(0); ++j) p.poly_coeffs.push_back(1.0 / (1.0 + j));
  for (auto _ : state) benchmark::DoNotOptimize(expand_potential(p));
}
BENCHMARK(BM_ExpandPotential)->Arg(2)->Arg(8)->Arg(16);

void BM_FullReport(benchmark::State& state) {
  const auto spec = make_spec({{1.0, -0.5, 0.25}, 0}, mixed_inner(), {},
                              BoundaryGrid{-10.0, 10.0, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(full_report(spec));
}
BENCHMARK(BM_FullReport)->Arg(201)->Arg(2001);

void BM_TranslationModel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(translation_model_check(static_cast<int>(state.range(0)), 0));
}
BENCHMARK(BM_TranslationModel)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
