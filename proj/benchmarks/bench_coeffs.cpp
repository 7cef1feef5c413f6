#include <benchmark/benchmark.h>

#include "zass/casas.hpp"
#include "zass/coeffs.hpp"

namespace {

void BM_GRightClosedForm(benchmark::State& state) {
  const zass::Scalar u(1.3, 0.2), v(-0.7, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(zass::g_right(u, v));
}
BENCHMARK(BM_GRightClosedForm);

void BM_GRightSeries(benchmark::State& state) {
  const zass::Scalar u(0.1, 0.05), v(0.2, -0.1);
  for (auto _ : state) benchmark::DoNotOptimize(zass::g_right(u, v));
}
BENCHMARK(BM_GRightSeries);

void BM_GRightDividedDifference(benchmark::State& state) {
  const zass::Scalar u(2.0, 0.5), v(1e-3, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(zass::g_right(u, v));
}
BENCHMARK(BM_GRightDividedDifference);

void BM_CFromRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zass::c_from_recurrence(n, 1.0, -0.5));
}
BENCHMARK(BM_CFromRecurrence)->Arg(4)->Arg(12)->Arg(30);

}  // namespace
