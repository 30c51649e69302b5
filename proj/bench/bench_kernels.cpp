// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "gear/graph.hpp"
#include "gear/kernels.hpp"
#include "gear/laplacian.hpp"
#include "gear/pinv.hpp"
#include "gear/rational.hpp"

using namespace gear;

namespace {

FloatMatrix random_float(std::size_t m) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  FloatMatrix a(m, m);
  for (auto& x : a.data()) x = u(rng);
  return a;
}

RationalMatrix random_rational(std::size_t m) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  RationalMatrix a(m, m);
  for (auto& x : a.data()) x = make_rational(num(rng), den(rng));
  return a;
}

FloatMatrix laplacian_base(int n) {
  RationalMatrix base = a_matrix(n);
  if (n % 2 == 1) base = base + h_matrix(n);
  return to_float(base);
}

void BM_FloatMultiplySerial(benchmark::State& state) {
  const FloatMatrix a = random_float(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::multiply(a, a));
}

void BM_FloatMultiplyParallel(benchmark::State& state) {
  const FloatMatrix a = random_float(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::multiply(a, a));
}

void BM_RationalMultiplySerial(benchmark::State& state) {
  const RationalMatrix a = random_rational(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::multiply(a, a));
}

void BM_RationalMultiplyParallel(benchmark::State& state) {
  const RationalMatrix a = random_rational(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::multiply(a, a));
}

void BM_LaplacianSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FloatMatrix base = laplacian_base(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::laplacian_b_sum(n, laplacian_term_count(n), base));
}

void BM_LaplacianParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FloatMatrix base = laplacian_base(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::laplacian_b_sum(n, laplacian_term_count(n), base));
}

void BM_RationalPinv(benchmark::State& state) {
  const RationalMatrix d = to_rational(gear_distance_closed(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(rational_pinv(d));
}

}  // namespace

BENCHMARK(BM_FloatMultiplySerial)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_FloatMultiplyParallel)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_RationalMultiplySerial)->Arg(16)->Arg(32);
BENCHMARK(BM_RationalMultiplyParallel)->Arg(16)->Arg(32);
BENCHMARK(BM_LaplacianSerial)->Arg(30)->Arg(60)->Arg(120);
BENCHMARK(BM_LaplacianParallel)->Arg(30)->Arg(60)->Arg(120);
BENCHMARK(BM_RationalPinv)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
