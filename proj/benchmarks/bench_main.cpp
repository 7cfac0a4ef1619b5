#include <benchmark/benchmark.h>

#include "sgames/enumeration.hpp"
#include "sgames/oracle.hpp"

using namespace sgames;

namespace {

void BM_ClosedFormulas(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_formulas(n));
  }
}
BENCHMARK(BM_ClosedFormulas)->Arg(30)->Arg(200);

void BM_PairEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    for_each_pair(n, [&count](const VectorGame&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PairEnumeration)->Arg(10)->Arg(14)->Arg(16);

void BM_CanonicalEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    for_each_bipartite_canonical(n, [&count](const VectorGame&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CanonicalEnumeration)->Arg(14)->Arg(16);

void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SimpleGame g = expand({{n - n / 3, n / 3}, {{n - n / 3 - 1, 0}, {n - n / 3 - 2, 1}}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(g));
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(9)->Arg(12);

void BM_LabeledGameStream(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    for_each_labeled_game(n, [&count](const SimpleGame&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_LabeledGameStream)->Arg(4)->Arg(5);

void BM_OracleClassify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_by_t(n));
  }
}
BENCHMARK(BM_OracleClassify)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
