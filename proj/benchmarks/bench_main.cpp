#include <benchmark/benchmark.h>

#include "angularity/crofton.hpp"
#include "angularity/curvmeas.hpp"
#include "angularity/grassrank.hpp"
#include "angularity/repcomb.hpp"

using namespace angularity;

static void BM_FaceLattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Polytope p = shapes::random_polytope(n, n + 6, 1);
    benchmark::DoNotOptimize(p.faces().size());
  }
}
BENCHMARK(BM_FaceLattice)->DenseRange(2, 4);

static void BM_IntrinsicVolumesExact(benchmark::State& state) {
  const Polytope p = shapes::random_polytope(3, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(intrinsic_volumes(p));
}
BENCHMARK(BM_IntrinsicVolumesExact)->Arg(6)->Arg(12);

static void BM_ExternalAngleMonteCarlo(benchmark::State& state) {
  std::vector<Vec> gens;
  for (int i = 0; i < 5; ++i) gens.push_back(Vec::Unit(5, i));
  const PolyCone c(5, gens);
  AngleOptions opts;
  opts.seed = 3;
  opts.samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(external_angle(c, opts).value);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ExternalAngleMonteCarlo)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

static void BM_RestrictionRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  const std::uint64_t c = binomial(n, k);
  for (auto _ : state) benchmark::DoNotOptimize(restriction_rank(n, k, std::max<std::uint64_t>(500, 2 * c * (c + 1)), 4).rank);
}
BENCHMARK(BM_RestrictionRank)->Args({4, 2})->Args({6, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

static void BM_CroftonEstimate(benchmark::State& state) {
  const Polytope p = shapes::random_polytope(3, 8, 5);
  const FlatMeasure m = calibrate(flat_measure_for(p, 1), 20000, 1);
  for (auto _ : state) benchmark::DoNotOptimize(crofton_estimate(p, m, static_cast<std::uint64_t>(state.range(0)), 2).value);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CroftonEstimate)->Arg(1 << 15)->Unit(benchmark::kMillisecond);

static void BM_LittlewoodRichardson(benchmark::State& state) {
  const Partition l{4, 3, 2, 1}, m{3, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(tensor_decompose(l, m, 8).size());
}
BENCHMARK(BM_LittlewoodRichardson);
BENCHMARK_MAIN();
