#include <benchmark/benchmark.h>

#include <random>

#include "chowbundle/bundlecalc.hpp"
#include "chowbundle/lattice.hpp"
#include "chowbundle/strata.hpp"

using namespace chowbundle;

static void BM_CapitalF(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  const auto order = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(capital_F(r, 1, order));
}
BENCHMARK(BM_CapitalF)->Args({2, 8})->Args({2, 12})->Args({3, 8})->Unit(benchmark::kMillisecond);

static void BM_PushforwardFull(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  const auto m = static_cast<unsigned>(state.range(1));
  const BundleParams p{r, 1, m, static_cast<std::size_t>(m * r + 1), false};
  for (auto _ : state) benchmark::DoNotOptimize(pushforward_chern_full(p));
}
BENCHMARK(BM_PushforwardFull)->Args({2, 2})->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_PushforwardModW(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  const auto m = static_cast<unsigned>(state.range(1));
  const BundleParams p{r, 1, m, static_cast<std::size_t>(m * r + 1), true};
  for (auto _ : state) benchmark::DoNotOptimize(pushforward_chern_mod_w(p));
}
BENCHMARK(BM_PushforwardModW)->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_Hnf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> entry(-50, 50);
  IntegerMatrix m(n + 4, std::vector<mpz_class>(n));
  for (auto& row : m)
    for (auto& x : row) x = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_Hnf)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_DaggerChowPiece(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dagger_chow_piece(2, 1, n));
}
BENCHMARK(BM_DaggerChowPiece)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_RankIdentity(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_identity_check(r, 1, 10, false));
}
BENCHMARK(BM_RankIdentity)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
