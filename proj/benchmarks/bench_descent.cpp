#include <benchmark/benchmark.h>

#include "descent3/descent.hpp"
#include "descent3/group_spec.hpp"

using namespace descent3;

static void BM_Grt(benchmark::State& state, const std::string& spec, int p) {
    auto g = make_group(spec);
    for (auto _ : state) benchmark::DoNotOptimize(grt_check(g, p).verdict());
}
BENCHMARK_CAPTURE(BM_Grt, q8, std::string("quaternion:8"), 2);
BENCHMARK_CAPTURE(BM_Grt, z9xz9, std::string("direct:cyclic:9,cyclic:9"), 3);

static void BM_Delta(benchmark::State& state, const std::string& spec, int p) {
    auto g = make_group(spec);
    normal_subgroups(g);  // warm the lattice cache; measures classification
    for (auto _ : state) benchmark::DoNotOptimize(delta_subgroup(g, p).order());
}
BENCHMARK_CAPTURE(BM_Delta, q8, std::string("quaternion:8"), 2);
BENCHMARK_CAPTURE(BM_Delta, order81, std::string("semidirect:9,9,4"), 3);

static void BM_MainTheorem(benchmark::State& state, const std::string& spec, int p) {
    auto g = make_group(spec);
    for (auto _ : state) benchmark::DoNotOptimize(verify_main_theorem(g, p).verdict);
}
BENCHMARK_CAPTURE(BM_MainTheorem, modular3, std::string("modular:3"), 3);
BENCHMARK_CAPTURE(BM_MainTheorem, dihedral16, std::string("dihedral:16"), 2);

static void BM_BaerSum(benchmark::State& state, int p) {
    auto w4 = omega_catalog(4, p);
    auto w6 = omega_catalog(6, p);
    for (auto _ : state) benchmark::DoNotOptimize(baer_sum(w4, w6).middle->order());
}
BENCHMARK_CAPTURE(BM_BaerSum, p3, 3);
BENCHMARK_CAPTURE(BM_BaerSum, p5, 5);

static void BM_Hoechsmann(benchmark::State& state) {
    auto g = make_group("cyclic:4");
    Subgroup m = subgroup_closure(g, {2});
    auto quo = quotient(g, m);
    auto w2 = omega_catalog(2, 2);
    auto iso = is_isomorphic(quo.group, w2.base);
    auto twisted = twist(w2, *iso);
    for (auto _ : state)
        benchmark::DoNotOptimize(embedding_solutions(g, m, quo, twisted).solutions.size());
}
BENCHMARK(BM_Hoechsmann);
