#include <benchmark/benchmark.h>

#include "posetlab/generators.hpp"
#include "posetlab/reversibility.hpp"
#include "posetlab/sampler.hpp"
#include "posetlab/signatures.hpp"
#include "posetlab/wcol.hpp"

namespace {

using namespace posetlab;

void bm_closure_random(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  std::vector<int> lvl(n);
  for (int v = 0; v < n; ++v) lvl[v] = static_cast<int>(rand_below(rng, 6));
  std::vector<std::pair<int, int>> covers;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (lvl[u] < lvl[v] && rand_below(rng, 100) < 15) covers.push_back({u, v});
  for (auto _ : state)
    benchmark::DoNotOptimize(Poset::from_cover_relations(n, covers));
}
BENCHMARK(bm_closure_random)->Arg(64)->Arg(256)->Arg(1024);

void bm_weak_reach(benchmark::State& state) {
  Rng rng(11);
  CoverGraph g = sample_connected_graph(rng, static_cast<int>(state.range(0)), 0.1);
  VertexOrder pi = smallest_last_order(g);
  for (auto _ : state) benchmark::DoNotOptimize(weak_reach(g, pi, 3));
}
BENCHMARK(bm_weak_reach)->Arg(32)->Arg(128)->Arg(512);

void bm_dim_exact_standard(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  StandardInstance inst = gen_standard_example(m);
  for (auto _ : state)
    benchmark::DoNotOptimize(dim_exact(inst.poset, 2 * m * m));
}
BENCHMARK(bm_dim_exact_standard)->Arg(3)->Arg(4)->Arg(5);

void bm_dim_exact_pht21(benchmark::State& state) {
  PhtInstance inst = gen_pht(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dim_exact(inst.poset, 100));
}
BENCHMARK(bm_dim_exact_pht21);

void bm_signature_partition(benchmark::State& state) {
  Poset p = sample_poset_with_bounded_inc(5, static_cast<int>(state.range(0)),
                                          3, 0.25, 1 << 20);
  SignaturePartitionOptions opts;
  opts.force_heuristic_order = true;
  for (auto _ : state) benchmark::DoNotOptimize(signature_partition(p, opts));
}
BENCHMARK(bm_signature_partition)->Arg(16)->Arg(32)->Arg(64);

void bm_gen_pht(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gen_pht(static_cast<int>(state.range(0)), 2));
}
BENCHMARK(bm_gen_pht)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
