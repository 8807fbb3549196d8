#include <benchmark/benchmark.h>

#include <vector>

#include "numsg/classify.hpp"
#include "numsg/dual.hpp"
#include "numsg/gluing.hpp"
#include "numsg/modular.hpp"
#include "numsg/oracle.hpp"
#include "numsg/semigroup.hpp"

namespace {

using numsg::Int;
using numsg::NumericalSemigroup;

// <m, m+1, ..., 2m-1> has multiplicity m and every residue in its generators.
std::vector<Int> interval_generators(Int m) {
  std::vector<Int> gens;
  for (Int g = m; g < 2 * m; ++g) gens.push_back(g);
  return gens;
}

void BM_FromGenerators(benchmark::State& state) {
  const Int m = state.range(0);
  const std::vector<Int> gens{m, m + 1, 2 * m + 3};
  for (auto _ : state) {
    auto h = NumericalSemigroup::from_generators(gens);
    benchmark::DoNotOptimize(h.frobenius());
  }
  state.SetComplexityN(m);
}

BENCHMARK(BM_FromGenerators)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_PseudoFrobenius(benchmark::State& state) {
  const auto h = NumericalSemigroup::from_generators(interval_generators(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(numsg::pseudo_frobenius(h));
  state.SetComplexityN(state.range(0));
}

BENCHMARK(BM_PseudoFrobenius)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_Classify(benchmark::State& state) {
  const auto h = NumericalSemigroup::from_generators({5, 8, 11, 12});
  for (auto _ : state) benchmark::DoNotOptimize(numsg::is_almost_symmetric(h));
}

BENCHMARK(BM_Classify);

void BM_DualOfMaximal(benchmark::State& state) {
  const auto h = NumericalSemigroup::from_generators(interval_generators(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(numsg::dual_of_maximal(h));
}

BENCHMARK(BM_DualOfMaximal)->RangeMultiplier(4)->Range(16, 1024);

void BM_EnumerateByGenus(benchmark::State& state) {
  const Int genus = state.range(0);
  long count = 0;
  for (auto _ : state) {
    count = 0;
    numsg::oracle::enumerate_by_genus(genus, [&](const NumericalSemigroup&) { ++count; });
  }
  state.counters["semigroups"] = static_cast<double>(count);
}

BENCHMARK(BM_EnumerateByGenus)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

void BM_CompleteIntersection(benchmark::State& state) {
  const numsg::GluingSpec spec{NumericalSemigroup::from_generators({6, 10, 11, 13, 14}),
                               NumericalSemigroup::from_generators({7, 8, 10, 13}), 14, 17};
  const auto h = numsg::glue(spec);
  for (auto _ : state) benchmark::DoNotOptimize(numsg::is_complete_intersection(h));
}

BENCHMARK(BM_CompleteIntersection)->Unit(benchmark::kMicrosecond);

void BM_OpenedModular(benchmark::State& state) {
  const Int b = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(numsg::opened_modular(b / 2 + 1, b));
}

BENCHMARK(BM_OpenedModular)->RangeMultiplier(4)->Range(16, 4096);

}  // namespace

BENCHMARK_MAIN();
