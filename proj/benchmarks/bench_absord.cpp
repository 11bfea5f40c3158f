#include <benchmark/benchmark.h>

#include "absord/cosets.hpp"
#include "absord/coxeter.hpp"
#include "absord/group.hpp"
#include "absord/lattice.hpp"
#include "absord/matchings.hpp"
#include "absord/tuples.hpp"

using namespace absord;

namespace {

void bm_enumerate_b4(benchmark::State& state) {
  for (auto _ : state) {
    GroupUniverse U = enumerate_group(CoxeterDescriptor::B(4));
    benchmark::DoNotOptimize(U.elems.size());
  }
}
BENCHMARK(bm_enumerate_b4)->Unit(benchmark::kMillisecond);

void bm_group_poset_s5(benchmark::State& state) {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(5));
  for (auto _ : state) {
    RankedPoset p = group_poset(U);
    benchmark::DoNotOptimize(p.covers.size());
  }
}
BENCHMARK(bm_group_poset_s5)->Unit(benchmark::kMillisecond);

void bm_matchings_poset(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto mp = matchings_poset(n);
    benchmark::DoNotOptimize(mp.poset.covers.size());
  }
}
BENCHMARK(bm_matchings_poset)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_flat_lattice_d4(benchmark::State& state) {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::D(4));
  for (auto _ : state) {
    FlatLattice L = build_flat_lattice(U);
    benchmark::DoNotOptimize(L.mobius.size());
  }
}
BENCHMARK(bm_flat_lattice_d4)->Unit(benchmark::kMillisecond);

void bm_coset_scan_s5(benchmark::State& state) {
  GroupUniverse U = enumerate_group(CoxeterDescriptor::A(5));
  GroupContext ctx = full_context(U);
  std::vector<int> H = subgroup_closure(U, {1});
  for (auto _ : state) {
    ModularityReport r = check_modular(ctx, H);
    benchmark::DoNotOptimize(r.modular);
  }
}
BENCHMARK(bm_coset_scan_s5)->Unit(benchmark::kMillisecond);

void bm_chain_formula(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int k = 1; k < n; ++k)
      benchmark::DoNotOptimize(tree_chain_formula(n, k));
  }
}
BENCHMARK(bm_chain_formula)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
