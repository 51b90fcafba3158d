// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "hypercover/oracles.hpp"

using namespace hypercover;

namespace {

Execution mode(const benchmark::State& st) { return st.range(1) ? Execution::parallel : Execution::serial; }

void BM_verify_cover(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    std::vector<int> w;
    for (int i = 0; i <= n; i += 3) w.push_back(i);
    const SymmetricSet s(n, w);
    const auto f = construct_symmetric_cover(s, 2);
    const CoverSpec spec(s.complement(), 2, 1);
    for (auto _ : st) benchmark::DoNotOptimize(verify_cover(f, spec, mode(st)));
    st.SetItemsProcessed(st.iterations() * (int64_t{1} << n));
}

void BM_ehc_oracle(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const CoverSpec spec(SymmetricSet(n, {1}).complement(), 2, 1);
    for (auto _ : st) benchmark::DoNotOptimize(ehc_oracle(spec, {}, mode(st)));
}

}  // namespace

BENCHMARK(BM_verify_cover)->ArgsProduct({{12, 14, 16}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ehc_oracle)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
