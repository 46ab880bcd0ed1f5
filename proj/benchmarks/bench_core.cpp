#include <benchmark/benchmark.h>

#include <random>

#include "optrig/center_of_mass.hpp"
#include "optrig/linalg.hpp"
#include "optrig/trig.hpp"

namespace {

optrig::ComplexMatrix gaussian(int n, std::uint64_t seed, double shift = 0.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  optrig::CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  m += shift * optrig::CMatrix::Identity(n, n);
  return optrig::ComplexMatrix(m);
}

void BM_OperatorNorm(benchmark::State& state) {
  const auto t = gaussian(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(optrig::operator_norm(t));
}
BENCHMARK(BM_OperatorNorm)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_CosT(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto t = gaussian(n, 2, 3.0 * n);
  for (auto _ : state) benchmark::DoNotOptimize(optrig::cos_t(t).value);
}
BENCHMARK(BM_CosT)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RealCenter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto t = gaussian(n, 3);
  const auto a = gaussian(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(optrig::real_center_of_mass(t, a).epsilon0);
}
BENCHMARK(BM_RealCenter)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TotalCenter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto t = gaussian(n, 5);
  const auto a = gaussian(n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(optrig::total_center_of_mass(t, a).residual);
}
BENCHMARK(BM_TotalCenter)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
