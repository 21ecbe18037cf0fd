#include <random>
#include <sstream>

#include <benchmark/benchmark.h>

#include "fracfactor/factor_oracle.hpp"
#include "fracfactor/theorem.hpp"

using namespace fracfactor;

namespace {

// Dense graphs keep T small for most S, so the whole 2^n space is walked.
Graph dense_graph(int n)
{
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    return random_graph(n, 0.85, rng);
}

void BM_DeletedSerial(benchmark::State& state)
{
    const Graph g = dense_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::is_fractional_ab_deleted(g, 1, 3).holds);
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_DeletedParallel(benchmark::State& state)
{
    const Graph g = dense_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_fractional_ab_deleted(g, 1, 3).holds);
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_DeletedFlow(benchmark::State& state)
{
    const Graph g = dense_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_fractional_ab_deleted_by_flow(g, 1, 3));
}

std::string dense_stream()
{
    std::ostringstream out;
    for_each_dense_graph(7, 3, [&out](const Graph& g) { out << to_graph6(g) << '\n'; });
    return out.str();
}

template <bool Parallel>
void BM_Scan(benchmark::State& state)
{
    const std::string input = dense_stream();
    ScanOptions opts;
    opts.theorem = TheoremId::spectral_radius;
    for (auto _ : state) {
        std::istringstream in(input);
        const auto noop = [](const ScanRecord&) {};
        const ScanSummary s = Parallel ? scan(in, opts, noop) : scan_serial(in, opts, noop);
        benchmark::DoNotOptimize(s.checked);
    }
}

}  // namespace

BENCHMARK(BM_DeletedSerial)->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeletedParallel)->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeletedFlow)->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan<true>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
