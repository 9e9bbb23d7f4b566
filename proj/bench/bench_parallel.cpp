#include "eqcoh/fixtures.hpp"
#include "eqcoh/verify.hpp"

#include <benchmark/benchmark.h>

using namespace eqcoh;

namespace {

verify::Options options(benchmark::State& state) {
    verify::Options opts;
    opts.count = static_cast<std::size_t>(state.range(0));
    return opts;
}

void BM_VerifySerial(benchmark::State& state) {
    const auto opts = options(state);
    for (auto _ : state) benchmark::DoNotOptimize(verify::run_serial(opts).violations());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_VerifyParallel(benchmark::State& state) {
    const auto opts = options(state);
    for (auto _ : state) benchmark::DoNotOptimize(verify::run(opts).violations());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

struct Truncation {
    fixtures::PeriodicFixture f = fixtures::torus(3);
    PeriodicDecomposition dec = decompose_periodic(f.graph, f.w);
};

void BM_TruncationSerial(benchmark::State& state) {
    const Truncation t;
    const auto r = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(truncation_oracle_serial(t.f.graph, t.f.w, t.dec, r).mismatches);
}

void BM_TruncationParallel(benchmark::State& state) {
    const Truncation t;
    const auto r = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(truncation_oracle(t.f.graph, t.f.w, t.dec, r).mismatches);
}

} // namespace

BENCHMARK(BM_VerifySerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TruncationSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TruncationParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
