#include <benchmark/benchmark.h>

#include "parity31/census.hpp"
#include "parity31/membership.hpp"
#include "parity31/oracle.hpp"
#include "parity31/sigma_constants.hpp"

using namespace parity31;

static void BM_ConstantsTable64(benchmark::State& state) {
    for (auto _ : state) {
        ConstantsTable t = constants_table(64);
        benchmark::DoNotOptimize(t.G);
    }
}
BENCHMARK(BM_ConstantsTable64);

static void BM_Member(benchmark::State& state) {
    Membership mem;
    uint64_t n = 1000003;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mem.member(n).member);
        n += 1;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Member);

static void BM_OracleBuild(benchmark::State& state) {
    for (auto _ : state) {
        OracleSet set(static_cast<uint64_t>(state.range(0)));
        benchmark::DoNotOptimize(set.count_leq(set.limit()));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleBuild)->Range(1 << 12, 1 << 17)->Complexity();

static void BM_CensusBlock(benchmark::State& state) {
    Membership mem;
    for (auto _ : state) {
        CensusConfig cfg;
        cfg.x_max = static_cast<uint64_t>(state.range(0));
        cfg.checkpoints = {cfg.x_max};
        cfg.threads = 1;
        auto rows = run_census(cfg, mem);
        benchmark::DoNotOptimize(rows.back().a);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CensusBlock)->Arg(1 << 16)->Arg(1 << 20);

BENCHMARK_MAIN();
