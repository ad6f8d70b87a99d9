#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rectrep/evaluate.hpp"
#include "rectrep/forcing.hpp"
#include "rectrep/geometry.hpp"
#include "rectrep/oracle.hpp"
#include "rectrep/permutation.hpp"
#include "rectrep/random.hpp"
#include "rectrep/sequence_pair.hpp"

using namespace rectrep;

namespace {

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
  shuffle(image, rng);
  return Permutation(std::move(image));
}

void BM_IsPlane(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Permutation p = random_permutation(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(is_plane(p));
}
BENCHMARK(BM_IsPlane)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_NaiveIsPlane(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Permutation p = random_permutation(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::naive_is_plane(p));
}
BENCHMARK(BM_NaiveIsPlane)->Arg(8)->Arg(16)->Arg(32);

void BM_CountPlane(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_class(n, PermutationClass::kPlane));
}
BENCHMARK(BM_CountPlane)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CountPlanePruned(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_class_pruned(n, PermutationClass::kPlane));
}
BENCHMARK(BM_CountPlanePruned)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ExtractRestricted(benchmark::State& state) {
  const Placement p = oracle::random_feasible_placement(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(extract_sequence_pair(p, true));
}
BENCHMARK(BM_ExtractRestricted)->Arg(8)->Arg(32)->Arg(64);

void BM_Compact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const SequencePair sp(random_permutation(n, rng), random_permutation(n, rng));
  std::vector<Rational> w, h;
  for (int i = 0; i < n; ++i) {
    w.emplace_back(draw_between(rng, 1, 9));
    h.emplace_back(draw_between(rng, 1, 9));
  }
  const Dimensions dims(w, h);
  for (auto _ : state) benchmark::DoNotOptimize(compact(sp, dims));
}
BENCHMARK(BM_Compact)->Arg(8)->Arg(32)->Arg(64);

void BM_ConstructForcing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ConstructionChecks checks = state.range(1) != 0 ? ConstructionChecks::kEveryLevel : ConstructionChecks::kRootOnly;
  const std::vector<Permutation> biplane = enumerate_biplane(n);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_forcing_placement(biplane[k], checks));
    k = (k + 1) % biplane.size();
  }
}
BENCHMARK(BM_ConstructForcing)->Args({7, 0})->Args({7, 1})->Args({8, 0});

}  // namespace

BENCHMARK_MAIN();
