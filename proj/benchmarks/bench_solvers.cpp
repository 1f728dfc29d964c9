#include <benchmark/benchmark.h>

#include "khcp/exact.hpp"
#include "khcp/generators.hpp"
#include "khcp/heuristic.hpp"
#include "khcp/trees.hpp"
#include "khcp/walk.hpp"

namespace {

void BM_ExactRandom(benchmark::State& state) {
    auto g = khcp::gen_random_connected(static_cast<int>(state.range(0)), 3.0, 7);
    for (auto _ : state) {
        auto r = khcp::solve_exact(g);
        benchmark::DoNotOptimize(r.m);
    }
}
BENCHMARK(BM_ExactRandom)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ExactPetersen(benchmark::State& state) {
    auto g = khcp::gen_generalized_petersen(8, 4);
    for (auto _ : state) {
        auto r = khcp::solve_exact(g);
        benchmark::DoNotOptimize(r.m);
    }
}
BENCHMARK(BM_ExactPetersen)->Unit(benchmark::kMillisecond);

void BM_HeuristicFull(benchmark::State& state) {
    auto g = khcp::gen_random_connected(static_cast<int>(state.range(0)), 3.0, 11);
    for (auto _ : state) {
        auto r = khcp::solve_heuristic(g, khcp::HeuristicMode::full);
        benchmark::DoNotOptimize(r.k);
    }
}
BENCHMARK(BM_HeuristicFull)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_HeuristicFast(benchmark::State& state) {
    auto g = khcp::gen_random_connected(static_cast<int>(state.range(0)), 3.0, 11);
    for (auto _ : state) {
        auto r = khcp::solve_heuristic(g, khcp::HeuristicMode::fast);
        benchmark::DoNotOptimize(r.k);
    }
}
BENCHMARK(BM_HeuristicFast)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_TreeCycle(benchmark::State& state) {
    auto g = khcp::gen_random_tree(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        auto s = khcp::tree_cycle(g);
        benchmark::DoNotOptimize(s.walk.length());
    }
}
BENCHMARK(BM_TreeCycle)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_TreePath(benchmark::State& state) {
    auto g = khcp::gen_random_tree(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        auto s = khcp::tree_path(g);
        benchmark::DoNotOptimize(s.walk.length());
    }
}
BENCHMARK(BM_TreePath)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_VerifyWalk(benchmark::State& state) {
    auto g = khcp::gen_random_tree(static_cast<int>(state.range(0)), 5);
    auto s = khcp::tree_cycle(g);
    for (auto _ : state) {
        auto rep = khcp::verify_walk(g, s.walk, khcp::WalkKind::cycle, s.unbounded);
        benchmark::DoNotOptimize(rep.valid);
    }
}
BENCHMARK(BM_VerifyWalk)->Arg(10000)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
