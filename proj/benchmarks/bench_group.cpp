#include <benchmark/benchmark.h>

#include "descent3/group_spec.hpp"

using namespace descent3;

static void BM_MakeGroup(benchmark::State& state, const std::string& spec) {
    for (auto _ : state) {
        auto g = make_group(spec);
        benchmark::DoNotOptimize(g->order());
    }
}
BENCHMARK_CAPTURE(BM_MakeGroup, heisenberg3, std::string("heisenberg:3"));
BENCHMARK_CAPTURE(BM_MakeGroup, semidirect_81, std::string("semidirect:9,9,4"));
BENCHMARK_CAPTURE(BM_MakeGroup, elementary_243, std::string("elementary:3:5"));

static void BM_NormalSubgroups(benchmark::State& state, const std::string& spec) {
    for (auto _ : state) {
        // fresh group so the memo cannot short-circuit the measurement
        auto g = make_group(spec);
        benchmark::DoNotOptimize(normal_subgroups(g).size());
    }
}
BENCHMARK_CAPTURE(BM_NormalSubgroups, dihedral16, std::string("dihedral:16"));
BENCHMARK_CAPTURE(BM_NormalSubgroups, heisenberg3, std::string("heisenberg:3"));
BENCHMARK_CAPTURE(BM_NormalSubgroups, elementary_2_6, std::string("elementary:2:6"));

static void BM_Quotient(benchmark::State& state) {
    auto g = make_group("semidirect:9,9,4");
    auto ns = normal_subgroups(g);
    for (auto _ : state) {
        for (const auto& n : ns) benchmark::DoNotOptimize(quotient(g, n).group->order());
    }
}
BENCHMARK(BM_Quotient);

static void BM_IsIsomorphic(benchmark::State& state) {
    auto a = make_group("semidirect:4,2,3");
    auto b = make_group("dihedral:8");
    for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(a, b).has_value());
}
BENCHMARK(BM_IsIsomorphic);

static void BM_Homs(benchmark::State& state) {
    auto g = make_group("semidirect:9,9,4");
    auto m = make_group("modular:3");
    for (auto _ : state) benchmark::DoNotOptimize(homs(g, m, true).size());
}
BENCHMARK(BM_Homs);
