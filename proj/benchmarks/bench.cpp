#include <benchmark/benchmark.h>

#include "netcert/canonical.hpp"
#include "netcert/witness.hpp"

namespace {

using namespace netcert;

constexpr double kPi4 = 0.78539816339744831;

void BM_BilocalBehavior(benchmark::State& state) {
  const auto cs = canonical_bilocal(kPi4, kPi4);
  for (auto _ : state) benchmark::DoNotOptimize(behavior_of(cs));
}
BENCHMARK(BM_BilocalBehavior);

void BM_ChainBehavior(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto cs =
      canonical_chain(std::vector<double>(size_t(n - 1), kPi4), ChainVariant::ij);
  for (auto _ : state) benchmark::DoNotOptimize(behavior_of(cs));
}
BENCHMARK(BM_ChainBehavior)->Arg(3)->Arg(5);

void BM_EvalChain(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto b = behavior_of(
      canonical_chain(std::vector<double>(size_t(n - 1), kPi4), ChainVariant::ij));
  for (auto _ : state) benchmark::DoNotOptimize(eval_chain_ij(b, n));
}
BENCHMARK(BM_EvalChain)->Arg(3)->Arg(5);

void BM_SvetlichnyStar(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto b = behavior_of(
      canonical_star(std::vector<double>(size_t(n), kPi4), {}, true));
  const auto cond = default_conditioning(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_star_svetlichny(b, n, cond));
}
BENCHMARK(BM_SvetlichnyStar)->Arg(2)->Arg(3);

void BM_OracleB3(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        brute_force_classical_max(Family::linear_b3, 3, 2, 9));
}
BENCHMARK(BM_OracleB3);

}  // namespace

BENCHMARK_MAIN();
