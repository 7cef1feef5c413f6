#include <benchmark/benchmark.h>

#include <random>

#include "zass/builders.hpp"
#include "zass/matrix.hpp"
#include "zass/verify.hpp"

namespace {

zass::CMatrix random_matrix(std::size_t n, double norm) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> d;
  zass::CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = zass::Scalar(d(rng), d(rng));
  return (norm / m.norm1()) * m;
}

void BM_Expm(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(zass::expm(a));
}
BENCHMARK(BM_Expm)->Arg(2)->Arg(8)->Arg(16);

void BM_RunSuite(benchmark::State& state) {
  const auto pair = zass::su11_pair(zass::Su11Generator::LowerSq, 8);
  for (auto _ : state) benchmark::DoNotOptimize(zass::run_suite(pair, 1e-10));
}
BENCHMARK(BM_RunSuite)->Unit(benchmark::kMillisecond);

}  // namespace
