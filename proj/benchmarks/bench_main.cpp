#include <benchmark/benchmark.h>

#include "momentforge/domino.hpp"
#include "momentforge/invmaj.hpp"
#include "momentforge/oracle.hpp"
#include "momentforge/schur.hpp"

using namespace momentforge;

static void BM_SchurSecondMoment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schur::second_moment(n, 2, 1));
}
BENCHMARK(BM_SchurSecondMoment)->Arg(40)->Arg(80)->Arg(150)->Unit(benchmark::kMillisecond);

static void BM_SchurSecondMomentDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schur::second_moment_direct(n, 2));
}
BENCHMARK(BM_SchurSecondMomentDirect)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_CountSubcubes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  oracle::BooleanFunction f(n);
  // fixed pseudo-random half of the cube
  std::uint64_t x = 0x9e3779b97f4a7c15ull;
  for (auto& w : f.words()) {
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    w = x;
  }
  if (n < 6) f.words()[0] &= (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::count_subcubes(f, k));
}
BENCHMARK(BM_CountSubcubes)->Args({12, 1})->Args({16, 1})->Args({16, 3})->Args({20, 2})->Unit(benchmark::kMicrosecond);

static void BM_EnumerateBoards(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_boards(m, n, 1));
}
BENCHMARK(BM_EnumerateBoards)->Args({3, 4})->Args({4, 4})->Args({4, 5})->Unit(benchmark::kMillisecond);

static void BM_BoardTransferPgf(benchmark::State& state) {
  const auto board = domino::make_board(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(domino::board_pgf(board));
}
BENCHMARK(BM_BoardTransferPgf)->Args({4, 5})->Args({6, 20})->Args({8, 30})->Unit(benchmark::kMillisecond);

static void BM_InvmajBinomialMoments(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(invmaj::binomial_moments(n, 6));
}
BENCHMARK(BM_InvmajBinomialMoments)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
