#include <benchmark/benchmark.h>

#include "freeshift/dynprops.hpp"
#include "freeshift/fixtures.hpp"
#include "freeshift/freext.hpp"
#include "freeshift/zline.hpp"

using namespace freeshift;
namespace fx = freeshift::fixtures;

static void BM_EnumerateGolden(benchmark::State& state) {
  const auto spec = golden_mean_spec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sft(spec).size());
}
BENCHMARK(BM_EnumerateGolden)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

static void BM_EnumerateFullShift(benchmark::State& state) {
  const auto spec = fx::full_shift_spec(cyclic(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sft(spec).size());
}
BENCHMARK(BM_EnumerateFullShift)->Arg(8)->Arg(12)->Arg(16);

static void BM_FreeExtensionTower(benchmark::State& state) {
  const auto tower = fx::z2_power_tower(4);
  const auto y = enumerate_sft(fx::full_shift_spec(tower.level(1)));
  const auto to = static_cast<std::size_t>(state.range(0));
  const auto ctx = ExtensionContext::from_tower(tower, 1, to);
  for (auto _ : state) benchmark::DoNotOptimize(free_extension(y, ctx).size());
}
BENCHMARK(BM_FreeExtensionTower)->Arg(2)->Arg(3)->Arg(4);

static void BM_ExtensionViaSpec(benchmark::State& state) {
  const auto tower = fx::z4_tower();
  const auto ctx = ExtensionContext::from_tower(tower, 0, 2);
  const auto spec = free_extension_spec(fx::no_adjacent_ones_spec(tower.level(0), 1), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sft(spec).size());
}
BENCHMARK(BM_ExtensionViaSpec);

static void BM_BaseExtract(benchmark::State& state) {
  const auto tower = fx::z4_tower();
  const auto ctx = ExtensionContext::from_tower(tower, 0, 1);
  const auto x = free_extension(enumerate_sft(fx::no_adjacent_ones_spec(tower.level(0), 1)), ctx);
  const std::vector<Element> shape = sorted_set({ctx.to_ambient(0), ctx.to_ambient(1)});
  for (auto _ : state) benchmark::DoNotOptimize(base_extract(x, shape, ctx).forbidden.size());
}
BENCHMARK(BM_BaseExtract);

static void BM_StrongIrreducibility(benchmark::State& state) {
  const auto g = cyclic(static_cast<std::size_t>(state.range(0)));
  const auto y = enumerate_sft(fx::no_adjacent_ones_spec(g, 1));
  const std::vector<Element> k = {0, 1, g->inv(1)};
  for (auto _ : state) benchmark::DoNotOptimize(strongly_irreducible(y, k));
}
BENCHMARK(BM_StrongIrreducibility)->Arg(6)->Arg(8)->Arg(10);

static void BM_MmeGrid(benchmark::State& state) {
  const auto y = enumerate_sft(golden_mean_spec(5));
  for (auto _ : state) benchmark::DoNotOptimize(mme_unique_check(y, static_cast<std::uint64_t>(state.range(0))).unique);
}
BENCHMARK(BM_MmeGrid)->Arg(50)->Arg(200);

static void BM_EvenCover(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(even_cover_factor_check(static_cast<std::size_t>(state.range(0))).agree);
}
BENCHMARK(BM_EvenCover)->Arg(8)->Arg(12);
BENCHMARK_MAIN();
