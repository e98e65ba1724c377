#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "foldchi/eulercalc.hpp"
#include "foldchi/io.hpp"
#include "foldchi/plumbing.hpp"
#include "foldchi/roundfold.hpp"

namespace {

using namespace foldchi;

// Random recursive tree with `edges` edges and uniformly random labels.
TargetGraph make_tree(int edges, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> chi(-3, 3), label(0, 3);
    TargetGraph g{{6, 2}, {{"v0", chi(rng)}}, "v0", {}};
    for (int i = 1; i <= edges; ++i) {
        const std::string id = "v" + std::to_string(i);
        const std::string parent = "v" + std::to_string(std::uniform_int_distribution<int>(0, i - 1)(rng));
        g.chi_region[id] = chi(rng);
        g.edges.push_back({parent, id, all_labels[label(rng)], chi(rng)});
    }
    return g;
}

void BM_TotalEuler(benchmark::State& state) {
    const TargetGraph g = make_tree(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(total_euler(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TotalEuler)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_TotalEulerMod2(benchmark::State& state) {
    const TargetGraph g = make_tree(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(total_euler_mod2(g));
}
BENCHMARK(BM_TotalEulerMod2)->RangeMultiplier(4)->Range(4, 1024);

void BM_Validate(benchmark::State& state) {
    const TargetGraph g = make_tree(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(validate_target_graph(g).ok());
}
BENCHMARK(BM_Validate)->RangeMultiplier(4)->Range(4, 1024);

void BM_JsonRoundTrip(benchmark::State& state) {
    const std::string doc = serialize_target_graph(make_tree(static_cast<int>(state.range(0)), 3));
    for (auto _ : state) benchmark::DoNotOptimize(serialize_target_graph(parse_target_graph_json(doc)));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * doc.size()));
}
BENCHMARK(BM_JsonRoundTrip)->Arg(8)->Arg(64)->Arg(512);

void BM_RoundArrangement(benchmark::State& state) {
    const std::vector<FoldLabel> labels(static_cast<std::size_t>(state.range(0)), min_plus);
    for (auto _ : state) benchmark::DoNotOptimize(total_euler(target_graph_from_round({7, 3}, labels)));
}
BENCHMARK(BM_RoundArrangement)->Arg(4)->Arg(64);

// [[1, -m], [0, -1]] factors into a chain whose length grows with |m|;
// Fibonacci-like entries give the longest chains for their size.
void BM_FactorAttaching(benchmark::State& state) {
    const std::int64_t m = state.range(0);
    const AttachingMatrix a(Mat2Z{1, -m, 0, -1});
    for (auto _ : state) benchmark::DoNotOptimize(factor_attaching(a));
}
BENCHMARK(BM_FactorAttaching)->Arg(1)->Arg(1000)->Arg(1'000'000);

void BM_FactorFibonacci(benchmark::State& state) {
    std::int64_t f0 = 0, f1 = 1;
    for (int i = 0; i < state.range(0); ++i) {
        const std::int64_t next = f0 + f1;
        f0 = f1;
        f1 = next;
    }
    // Cassini: f1 (f1 - f0) - f0^2 = +-1; swapping columns flips the sign.
    Mat2Z m{f1, f0, f0, f1 - f0};
    if (m.det() == 1) m = {f0, f1, f1 - f0, f0};
    const AttachingMatrix a(m);
    for (auto _ : state) benchmark::DoNotOptimize(factor_attaching(a));
}
BENCHMARK(BM_FactorFibonacci)->Arg(10)->Arg(40);

void BM_ComposeFactors(benchmark::State& state) {
    const std::vector<std::int64_t> es(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(compose_factors(es));
}
BENCHMARK(BM_ComposeFactors)->Arg(4)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
