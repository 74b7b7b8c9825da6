// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "domex/canon.hpp"
#include "domex/catalog.hpp"
#include "domex/construct.hpp"
#include "domex/domination.hpp"
#include "domex/excellence.hpp"

using namespace domex;

namespace {

const Graph& rook44() {
    static const Graph g = cartesian_product(complete(4), complete(4)).graph;
    return g;
}

const Catalog& regular94() {
    static const Catalog c = generate_regular(9, 4, true);
    return c;
}

Query k3_query() {
    Query q;
    q.pattern = complete(3);
    return q;
}

}  // namespace

static void BM_InducedCopiesSerial(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(induced_copies_serial(rook44(), cycle(4)));
}
static void BM_InducedCopiesParallel(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(induced_copies(rook44(), cycle(4)));
}

static void BM_VMinusSerial(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(v_minus_equal_serial(rook44()));
}
static void BM_VMinusParallel(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(v_minus_equal(rook44()));
}

static void BM_FamilySerial(benchmark::State& s) {
    const ParamResult sets = min_sets(rook44(), Param::gamma);
    for (auto _ : s) benchmark::DoNotOptimize(family_from_sets_serial(rook44(), Param::gamma, sets));
}
static void BM_FamilyParallel(benchmark::State& s) {
    const ParamResult sets = min_sets(rook44(), Param::gamma);
    for (auto _ : s) benchmark::DoNotOptimize(family_from_sets(rook44(), Param::gamma, sets));
}

static void BM_SearchSerial(benchmark::State& s) {
    const Query q = k3_query();
    for (auto _ : s) benchmark::DoNotOptimize(search_serial(regular94(), q));
}
static void BM_SearchParallel(benchmark::State& s) {
    const Query q = k3_query();
    for (auto _ : s) benchmark::DoNotOptimize(search(regular94(), q));
}

static void BM_AllGraphsSerial(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(generate_all_graphs_serial(6, false));
}
static void BM_AllGraphsParallel(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(generate_all_graphs(6, false));
}

static void BM_RegularSerial(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(generate_regular_serial(10, 5, false));
}
static void BM_RegularParallel(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(generate_regular(10, 5, false));
}

BENCHMARK(BM_InducedCopiesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InducedCopiesParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VMinusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VMinusParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FamilySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FamilyParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AllGraphsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllGraphsParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RegularSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegularParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
