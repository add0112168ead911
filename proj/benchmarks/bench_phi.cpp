#include <benchmark/benchmark.h>

#include "g2rc/bijection.hpp"
#include "g2rc/harness.hpp"
#include "g2rc/inverse.hpp"

using namespace g2rc;

namespace {

// the biggest cell at each L
Weight widest(int L) {
    Weight best{};
    std::size_t n = 0;
    for (int a = 0; a <= 2 * L; ++a)
        for (int b = 0; b <= L; ++b) {
            Weight w{a, b};
            auto k = rc::enumerate_configs(w, L).size();
            if (k > n) n = k, best = w;
        }
    return best;
}

void BM_EnumerateRC(benchmark::State& s) {
    int L = int(s.range(0));
    Weight w = widest(L);
    for (auto _ : s) benchmark::DoNotOptimize(rc::enumerate_rc(w, L));
}
BENCHMARK(BM_EnumerateRC)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_EnumeratePaths(benchmark::State& s) {
    int L = int(s.range(0));
    Weight w = widest(L);
    for (auto _ : s) benchmark::DoNotOptimize(paths::enumerate_paths(w, L));
}
BENCHMARK(BM_EnumeratePaths)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Phi(benchmark::State& s) {
    int L = int(s.range(0));
    auto rcs = rc::enumerate_rc(widest(L), L);
    for (auto _ : s)
        for (const auto& r : rcs) benchmark::DoNotOptimize(bij::phi(r));
    s.SetItemsProcessed(s.iterations() * long(rcs.size()));
}
BENCHMARK(BM_Phi)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_PhiInverse(benchmark::State& s) {
    int L = int(s.range(0));
    auto ps = paths::enumerate_paths(widest(L), L);
    for (auto _ : s)
        for (const auto& p : ps) benchmark::DoNotOptimize(inv::phi_inv(p));
    s.SetItemsProcessed(s.iterations() * long(ps.size()));
}
BENCHMARK(BM_PhiInverse)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& s) {
    harness::Options opt;
    opt.roundtrip_max_l = 0;
    for (auto _ : s) benchmark::DoNotOptimize(harness::sweep(int(s.range(0)), int(s.range(1)), opt));
}
BENCHMARK(BM_Sweep)->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
