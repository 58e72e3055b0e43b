#include <benchmark/benchmark.h>

#include <random>

#include "sergeev/exact_linalg.hpp"
#include "sergeev/structure_analysis.hpp"
#include "sergeev/trace_form.hpp"

using namespace sergeev;

// Cold cache: every generator product on every basis element.
static void BM_LeftMultiplyAllGenerators(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Algebra alg(AlgebraContext::create(n, d));
    for (const auto& g : alg.generators())
      for (BasisId b = 0; b < alg.dimension(); ++b) benchmark::DoNotOptimize(alg.lmul(g, b));
  }
  state.SetLabel("dim " + std::to_string(AlgebraContext::create(n, d)->dimension()));
}
BENCHMARK(BM_LeftMultiplyAllGenerators)->Args({2, 3})->Args({3, 2})->Args({4, 1})->Unit(benchmark::kMillisecond);

static void BM_MultiplyRandomPairs(benchmark::State& state) {
  Algebra alg(AlgebraContext::create(3, 2, {{0, Rational(3)}}));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<BasisId> pick(0, static_cast<BasisId>(alg.dimension() - 1));
  for (auto _ : state) benchmark::DoNotOptimize(alg.multiply(alg.basis(pick(rng)), alg.basis(pick(rng))));
}
BENCHMARK(BM_MultiplyRandomPairs);

static void BM_PairTable(benchmark::State& state) {
  for (auto _ : state) {
    Algebra alg(AlgebraContext::create(3, 2));
    PairTable table(alg);
    benchmark::DoNotOptimize(table.dimension());
  }
}
BENCHMARK(BM_PairTable)->Unit(benchmark::kMillisecond);

static void BM_CocenterRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Algebra alg(AlgebraContext::create(n, d));
    benchmark::DoNotOptimize(cocenter_rank(alg));
  }
}
BENCHMARK(BM_CocenterRank)->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

static void BM_RationalRank(benchmark::State& state) {
  const std::size_t size = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> val(-3, 3);
  linalg::SparseMatrix m(size);
  for (std::size_t r = 0; r < size; ++r) {
    std::vector<linalg::SparseVector::Entry> entries;
    for (std::size_t c = 0; c < size; ++c)
      if (rng() % 4 == 0) entries.push_back({c, Rational(val(rng))});
    m.add_row(linalg::SparseVector::from_entries(size, std::move(entries)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rank(m));
}
BENCHMARK(BM_RationalRank)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
