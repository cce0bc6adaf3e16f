#include <random>

#include <benchmark/benchmark.h>

#include "arbocoh/character_table.hpp"
#include "arbocoh/flip.hpp"
#include "arbocoh/sampling.hpp"
#include "arbocoh/spherical.hpp"

namespace {

using namespace arbocoh;

void BM_CharacterTable(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const PermGroup g = shape_automorphism_group(centipede_shape(q, static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g));
  state.counters["order"] = static_cast<double>(g.order());
}
BENCHMARK(BM_CharacterTable)->Args({2, 4})->Args({2, 6})->Args({3, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_ShapeAutomorphisms(benchmark::State& state) {
  const Shape s = y_shape(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shape_automorphism_group(s));
}
BENCHMARK(BM_ShapeAutomorphisms)->Arg(2)->Arg(3);

void BM_FindFlip(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<FlipInstance> instances;
  for (int i = 0; i < 64; ++i) instances.push_back(random_flip_instance(12, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& inst = instances[i++ % instances.size()];
    benchmark::DoNotOptimize(find_flip(inst.tree, inst.rays, inst.subtree, 12));
  }
}
BENCHMARK(BM_FindFlip);

void BM_CountHitting(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const TreeParams t(2);
  const Shape s = state.range(0) == 0 ? centipede_shape(2, 4) : y_shape(2);
  const auto r = random_distinct_rays(t, 3, 12, 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(count_hitting(s, r[0], r[1], r[2]));
}
BENCHMARK(BM_CountHitting)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_Intertwiner(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(intertwiner_matrix(2, Complex(0.3, 0), depth));
}
BENCHMARK(BM_Intertwiner)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_PhiValues(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(phi_values(3, Complex(0.5, 0.7), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PhiValues)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
