#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "archcat/archimedean.hpp"
#include "archcat/arrow.hpp"
#include "archcat/preorder.hpp"
#include "archcat/semigroup.hpp"

using namespace archcat;

namespace {

PreorderData chain(int n) {
  PreorderData d;
  for (int i = 0; i < n; ++i) d.elements.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) d.pairs.push_back({d.elements[i], d.elements[j]});
  }
  return d;
}

PreorderData indiscrete(int n) {
  PreorderData d;
  for (int i = 0; i < n; ++i) d.elements.push_back(std::to_string(i));
  for (const auto& x : d.elements) {
    for (const auto& y : d.elements) d.pairs.push_back({x, y});
  }
  return d;
}

}  // namespace

static void BM_EnumeratePreorders(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto all = enumerate_preorders(n);
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_EnumeratePreorders)->DenseRange(2, 4);

static void BM_VerifyProp1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = verify_prop1(n);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_VerifyProp1)->DenseRange(3, 4);

static void BM_VerifyProp2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = verify_prop2(n);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_VerifyProp2)->DenseRange(3, 4);

static void BM_VerifyLemma1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = verify_lemma1(n);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_VerifyLemma1)->DenseRange(2, 3);

static void BM_BuildArrowCategory(benchmark::State& state) {
  FiniteCategory c = to_category(Preorder::from_data(indiscrete(static_cast<int>(state.range(0)))));
  for (auto _ : state) {
    auto arrows = build_arrow_category(c);
    benchmark::DoNotOptimize(arrows);
  }
}
BENCHMARK(BM_BuildArrowCategory)->DenseRange(2, 4);

static void BM_ArchComposition(benchmark::State& state) {
  FiniteCategory c = to_category(Preorder::from_data(indiscrete(static_cast<int>(state.range(0)))));
  for (auto _ : state) {
    auto r = is_archimedean_composition(c);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ArchComposition)->DenseRange(2, 4);

static void BM_NvClosure(benchmark::State& state) {
  FiniteCategory c = to_category(Preorder::from_data(chain(static_cast<int>(state.range(0)))));
  MorphismId top = *c.morphism("m:0->" + std::to_string(state.range(0) - 1));
  for (auto _ : state) {
    auto closure = nv_closure(c, top);
    benchmark::DoNotOptimize(closure);
  }
}
BENCHMARK(BM_NvClosure)->DenseRange(2, 5);

BENCHMARK_MAIN();
