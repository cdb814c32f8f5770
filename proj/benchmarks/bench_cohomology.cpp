#include <benchmark/benchmark.h>

#include "descent3/central_series.hpp"
#include "descent3/cohomology.hpp"
#include "descent3/group_spec.hpp"

using namespace descent3;

static void BM_CoboundaryEchelon(benchmark::State& state, const std::string& spec, int m) {
    auto g = make_group(spec);
    for (auto _ : state) {
        GroupCohomology ws(g, m);
        benchmark::DoNotOptimize(ws.echelon().row_count());
    }
}
BENCHMARK_CAPTURE(BM_CoboundaryEchelon, d4_mod2, std::string("dihedral:8"), 2);
BENCHMARK_CAPTURE(BM_CoboundaryEchelon, order81_mod3, std::string("semidirect:9,9,4"), 3);
BENCHMARK_CAPTURE(BM_CoboundaryEchelon, order243_mod3, std::string("elementary:3:5"), 3);

static void BM_H2(benchmark::State& state, const std::string& spec, int m) {
    auto g = make_group(spec);
    for (auto _ : state) {
        auto H = h2(g, m);
        benchmark::DoNotOptimize(H.order());
    }
}
BENCHMARK_CAPTURE(BM_H2, klein_mod2, std::string("elementary:2:2"), 2);
BENCHMARK_CAPTURE(BM_H2, e27_mod3, std::string("elementary:3:3"), 3);
BENCHMARK_CAPTURE(BM_H2, z4cubed_mod4, std::string("direct:cyclic:4,direct:cyclic:4,cyclic:4"), 4);

static void BM_Transgression(benchmark::State& state) {
    auto g = make_group("semidirect:9,9,4");
    auto s = q_central_series(g, 3);
    const Subgroup& m = s.term(2);
    auto quo = quotient(g, m);
    auto inv = invariants_h1(m, 3);
    for (auto _ : state) {
        for (const auto& phi : inv) benchmark::DoNotOptimize(transgression(quo, phi).values.size());
    }
}
BENCHMARK(BM_Transgression);
