#include <benchmark/benchmark.h>

#include "massey/formality.hpp"
#include "massey/models.hpp"

using namespace massey;

static void BM_ComputeR(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_R(r).dim());
}
BENCHMARK(BM_ComputeR)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_P3Pentagonal(benchmark::State& state) {
  auto a = p3_model(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    InvariantContext ctx(*a);
    const auto p = pentagonal(ctx, canonical_choice(ctx.cohomology(), ctx.products()));
    benchmark::DoNotOptimize(rank(p.matrix));
  }
}
BENCHMARK(BM_P3Pentagonal)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_P3Context(benchmark::State& state) {
  auto a = p3_model(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    InvariantContext ctx(*a);
    benchmark::DoNotOptimize(ctx.d().dim());
  }
}
BENCHMARK(BM_P3Context)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_WitnessVerdict(benchmark::State& state) {
  auto a = nonformal_witness(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(formality_verdict(*a, 2).verdict);
}
BENCHMARK(BM_WitnessVerdict)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
