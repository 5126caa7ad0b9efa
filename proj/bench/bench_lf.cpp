#include "lfmove/index.hpp"
#include "lfmove/kernels.hpp"
#include "lfmove/predecessor_lf.hpp"
#include "lfmove/suffix_array.hpp"
#include "lfmove/workload.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

using namespace lfmove;

namespace {

// 16 mutated copies of a 64 KiB base over ACGT, built once
struct Fixture {
    std::vector<symbol_t> bwt;
    RunLengthBWT rl;
    Index table, blocked, balanced;
    std::vector<std::vector<symbol_t>> patterns;

    Fixture()
    {
        std::mt19937_64 rng(2024);
        auto base = workload::random_text(1 << 16, 4, rng);
        Text text = Text::from_bytes(workload::mutated_copies(base, 16, 0.001, rng));
        bwt = build_bwt(text);
        rl = runs_from_bwt(bwt);
        BuildOptions o;
        o.backend = Backend::table;
        table = Index::build_from_bwt(bwt, o);
        o.split = SplitConfig::balanced(2);
        balanced = Index::build_from_bwt(bwt, o);
        o = {};
        blocked = Index::build_from_bwt(bwt, o);
        patterns = workload::random_patterns(text.bytes(), 4096, 32, rng);
    }
};

const Fixture& fixture()
{
    static const Fixture f;
    return f;
}

const Index& pick(const Fixture& f, std::int64_t which)
{
    return which == 0 ? f.table : which == 1 ? f.blocked : f.balanced;
}

void set_threads(benchmark::State& state, std::int64_t arg)
{
    int threads = arg > 0 ? static_cast<int>(arg) : omp_get_num_procs();
    omp_set_num_threads(threads);
    state.counters["threads"] = threads;
}

void BM_LfChainMoveTable(benchmark::State& state)
{
    const auto& t = std::get<MoveTable>(fixture().table.storage());
    Position p{0, 0};
    for (auto _ : state) {
        p = t.lf_step(p);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_LfChainMoveTable);

void BM_LfChainBlocked(benchmark::State& state)
{
    const auto& t = std::get<BlockedTable>(fixture().blocked.storage());
    Position p{0, 0};
    for (auto _ : state) {
        p = t.lf_step(p);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_LfChainBlocked);

void BM_LfChainPredecessor(benchmark::State& state)
{
    PredecessorLf lf(fixture().rl);
    std::uint64_t i = 0;
    for (auto _ : state) {
        i = lf(i);
        benchmark::DoNotOptimize(i);
    }
}
BENCHMARK(BM_LfChainPredecessor);

// arg 0: table, 1: blocked, 2: balanced table
void BM_CountBatchSerial(benchmark::State& state)
{
    const auto& f = fixture();
    const auto& idx = pick(f, state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::count_batch_serial(idx, f.patterns));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.patterns.size()));
}
BENCHMARK(BM_CountBatchSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

// args: backend, threads (0: all processors)
void BM_CountBatchParallel(benchmark::State& state)
{
    const auto& f = fixture();
    const auto& idx = pick(f, state.range(0));
    set_threads(state, state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::count_batch(idx, f.patterns));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.patterns.size()));
}
BENCHMARK(BM_CountBatchParallel)->ArgsProduct({{0, 1, 2}, {0}})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_LfAllSerial(benchmark::State& state)
{
    const auto& idx = pick(fixture(), state.range(0));
    for (auto _ : state)
        idx.visit([](const auto& t) { benchmark::DoNotOptimize(kernels::lf_all_serial(t)); });
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(idx.size()));
}
BENCHMARK(BM_LfAllSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_LfAllParallel(benchmark::State& state)
{
    const auto& idx = pick(fixture(), state.range(0));
    set_threads(state, state.range(1));
    for (auto _ : state)
        idx.visit([](const auto& t) { benchmark::DoNotOptimize(kernels::lf_all(t)); });
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(idx.size()));
}
BENCHMARK(BM_LfAllParallel)->ArgsProduct({{0, 1, 2}, {0}})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ScanAllSerial(benchmark::State& state)
{
    const auto& idx = pick(fixture(), state.range(0));
    for (auto _ : state)
        idx.visit([](const auto& t) { benchmark::DoNotOptimize(kernels::scan_all_serial(t)); });
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(idx.size()));
}
BENCHMARK(BM_ScanAllSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ScanAllParallel(benchmark::State& state)
{
    const auto& idx = pick(fixture(), state.range(0));
    set_threads(state, state.range(1));
    for (auto _ : state)
        idx.visit([](const auto& t) { benchmark::DoNotOptimize(kernels::scan_all(t)); });
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(idx.size()));
}
BENCHMARK(BM_ScanAllParallel)->ArgsProduct({{0, 1, 2}, {0}})->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
