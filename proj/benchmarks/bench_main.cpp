#include "charlat/bernoulli.hpp"
#include "charlat/exact.hpp"
#include "charlat/lattice.hpp"
#include "charlat/plumbing.hpp"
#include "charlat/verify.hpp"

#include <benchmark/benchmark.h>

using namespace charlat;

static void BM_TangentTriangle(benchmark::State& state) {
  const auto limit = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tangent_numbers(limit));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TangentTriangle)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_BernoulliZeta(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_abs_zeta(n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BernoulliZeta)->RangeMultiplier(2)->Range(500, 8000)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_Sigma(benchmark::State& state) {
  const auto m = static_cast<unsigned long>(state.range(0));
  default_engine().reserve(m);
  for (auto _ : state) benchmark::DoNotOptimize(sigma(m));
}
BENCHMARK(BM_Sigma)->Arg(100)->Arg(1000)->Arg(2678);

static void BM_MinimalSignature(benchmark::State& state) {
  const auto m = static_cast<unsigned long>(state.range(0));
  default_engine().reserve(m);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_signature(make_ord(m)));
}
BENCHMARK(BM_MinimalSignature)->Arg(100)->Arg(1000);

static void BM_GcdScan(benchmark::State& state) {
  ScanOptions opt;
  opt.m_max = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_gcd_power_of_two(opt));
}
BENCHMARK(BM_GcdScan)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_IdentitySuite(benchmark::State& state) {
  ScanOptions opt;
  opt.m_max = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_identity_suite(opt));
}
BENCHMARK(BM_IdentitySuite)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
