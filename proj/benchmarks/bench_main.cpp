#include <benchmark/benchmark.h>

#include "toricred/factor.hpp"
#include "toricred/fill.hpp"
#include "toricred/lamination.hpp"
#include "toricred/lattice.hpp"

using namespace toricred;

namespace {

const std::vector<std::string> kXY{"x", "y"};

std::vector<MPoly> worked_system() {
  return {parse_polynomial("x^3+y^4-1", kXY), parse_polynomial("x^4+y^5-1", kXY)};
}

Support dense(int d) {
  std::vector<Point> pts;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) pts.push_back({i, j});
  return Support(std::move(pts));
}

void BM_MixedVolumeDense(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const SupportTuple P{dense(d), dense(d + 1)};
  for (auto _ : state) benchmark::DoNotOptimize(mixed_volume(P));
}
BENCHMARK(BM_MixedVolumeDense)->Arg(2)->Arg(4)->Arg(8);

void BM_CascadeWorked(benchmark::State& state) {
  const auto F = worked_system();
  for (auto _ : state) benchmark::DoNotOptimize(iterated_lamination_resultant(F, {1, 1}));
}
BENCHMARK(BM_CascadeWorked)->Unit(benchmark::kMillisecond);

void BM_PipelineWorked(benchmark::State& state) {
  const auto F = worked_system();
  for (auto _ : state) benchmark::DoNotOptimize(count_isolated_torus_roots(F, {1, 1}));
}
BENCHMARK(BM_PipelineWorked)->Unit(benchmark::kMillisecond);

void BM_FactorWorkedFactor(benchmark::State& state) {
  // bp(t, 1) / t^7
  const UPoly q({Rational(20), Rational(31), Rational(12), Rational(0), Rational(14), Rational(14), Rational(7),
                 Rational(-9), Rational(1), Rational(1)});
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_rationals(q));
}
BENCHMARK(BM_FactorWorkedFactor);

void BM_FillSimplices(benchmark::State& state) {
  const SupportTuple P{dense(2), dense(3)};
  for (auto _ : state) benchmark::DoNotOptimize(find_irreducible_fill(P));
}
BENCHMARK(BM_FillSimplices)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
