#include "critnum/oracle.hpp"
#include "critnum/sumset.hpp"

#include <benchmark/benchmark.h>

using namespace critnum;

namespace {

GSet stripe(const GroupPtr& g, std::uint32_t every) {
    GSet a(g);
    for (std::uint32_t x = 0; x < g->order(); x += every) {
        a.insert(Element{x});
    }
    return a;
}

void BM_HFold(benchmark::State& state) {
    const GroupPtr g = Group::cyclic(static_cast<std::uint32_t>(state.range(0)));
    const GSet a = stripe(g, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(h_fold(a, 3));
    }
}
BENCHMARK(BM_HFold)->Arg(64)->Arg(1024)->Arg(8192);

void BM_HFoldRestricted(benchmark::State& state) {
    const GroupPtr g = Group::cyclic(static_cast<std::uint32_t>(state.range(0)));
    const GSet a = stripe(g, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(h_fold_restricted(a, 3));
    }
}
BENCHMARK(BM_HFoldRestricted)->Arg(64)->Arg(512);

void BM_TranslateNonCyclic(benchmark::State& state) {
    const GroupPtr g = Group::parse("Z4xZ8xZ16");
    const GSet a = stripe(g, 3);
    std::uint32_t t = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.translated(Element{t}));
        t = (t * 5 + 1) % g->order();
    }
}
BENCHMARK(BM_TranslateNonCyclic);

void BM_SubsetSums(benchmark::State& state) {
    const GroupPtr g = Group::cyclic(257);
    const GSet a = stripe(g, 29);
    for (auto _ : state) {
        benchmark::DoNotOptimize(subset_sums(a));
    }
}
BENCHMARK(BM_SubsetSums);

void BM_ChiHat3(benchmark::State& state) {
    const GroupPtr g = Group::cyclic(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi_hat_exact(g, 3));
    }
}
BENCHMARK(BM_ChiHat3)->Arg(24)->Arg(36)->Unit(benchmark::kMillisecond);

void BM_RhoExact(benchmark::State& state) {
    const GroupPtr g = Group::parse("Z2xZ12");
    for (auto _ : state) {
        benchmark::DoNotOptimize(rho_exact(g, 9, 3));
    }
}
BENCHMARK(BM_RhoExact)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
