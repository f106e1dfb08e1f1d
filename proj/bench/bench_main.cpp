// Parallel kernels against their serial references.

#include "glr/coloring.hpp"
#include "glr/corpus.hpp"
#include "glr/enumerate.hpp"

#include <benchmark/benchmark.h>

using namespace glr;

namespace {

const ReducedPresentation& k1() {
  static const auto rp = extract_reduced(corpus_code("K1"));
  return rp;
}

const std::vector<FiniteGLRack>& order4() {
  static const auto racks = enumerate_glracks(4);
  return racks;
}

void BM_ColoringParallel(benchmark::State& state) {
  const auto x = mk_trivial(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_colorings(k1(), x).count);
}

void BM_ColoringSerial(benchmark::State& state) {
  const auto x = mk_trivial(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_colorings_serial(k1(), x).count);
}

void BM_ProfileOrder4Parallel(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& x : order4())
      benchmark::DoNotOptimize(count_colorings(k1(), x).count);
}

void BM_ProfileOrder4Serial(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& x : order4())
      benchmark::DoNotOptimize(count_colorings_serial(k1(), x).count);
}

void BM_EnumerateParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_glracks(static_cast<int>(state.range(0))).size());
}

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_glracks_serial(static_cast<int>(state.range(0))).size());
}

} // namespace

BENCHMARK(BM_ColoringParallel)->Arg(16)->Arg(128);
BENCHMARK(BM_ColoringSerial)->Arg(16)->Arg(128);
BENCHMARK(BM_ProfileOrder4Parallel);
BENCHMARK(BM_ProfileOrder4Serial);
BENCHMARK(BM_EnumerateParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
