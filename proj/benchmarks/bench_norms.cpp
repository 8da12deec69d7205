#include <benchmark/benchmark.h>

#include "tsilab/distortion.hpp"
#include "tsilab/norms.hpp"
#include "tsilab/shapes.hpp"
#include "tsilab/stability.hpp"

using namespace tsilab;

namespace {

SparseVector dense_vector(int dim) {
  std::vector<SparseVector::Term> terms;
  for (int i = 1; i <= dim; ++i)
    terms.emplace_back(i, Rational(i % 3 == 0 ? -2 : 1, 1 + i % 2));
  return SparseVector::from_terms(std::move(terms));
}

void BM_TsirelsonIterate(benchmark::State& state) {
  const auto x = dense_vector(static_cast<int>(state.range(0)));
  const int level = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsirelson_iterate(x, level));
  }
}
BENCHMARK(BM_TsirelsonIterate)->Args({6, 2})->Args({8, 4})->Args({16, 4});

void BM_TsirelsonLimit(benchmark::State& state) {
  const auto x = dense_vector(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsirelson_limit(x));
  }
}
BENCHMARK(BM_TsirelsonLimit)->Arg(8)->Arg(16);

void BM_BruteForceIterate(benchmark::State& state) {
  const auto x = dense_vector(6);
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_iterate(x, level));
  }
}
BENCHMARK(BM_BruteForceIterate)->Arg(2)->Arg(3);

void BM_ShapeSetBuild(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const int dim = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_shape_set(TsirelsonIterateNorm{level}, dim));
  }
}
BENCHMARK(BM_ShapeSetBuild)->Args({2, 6})->Args({4, 6})->Args({3, 8});

void BM_Distortion(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        distortion(TsirelsonIterateNorm{1}, TsirelsonIterateNorm{0}, dim));
  }
}
BENCHMARK(BM_Distortion)->Arg(5)->Arg(6)->Arg(8);

void BM_GapReport(benchmark::State& state) {
  const auto seq = NormSequence::parse("tsirelson:0..3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(gap_report(phi_matrix(seq, seq, 5), 0.01));
  }
}
BENCHMARK(BM_GapReport);

}  // namespace

BENCHMARK_MAIN();
