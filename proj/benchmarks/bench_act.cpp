#include <benchmark/benchmark.h>

#include "whit/solver.hpp"

using namespace whit;

namespace {

// x_{λ,μ,k} w with n copies of each entry.
ModuleVector tower(int n) {
    std::vector<Weight> lam;
    std::vector<Weight> mu;
    for (int i = 0; i < n; ++i) {
        lam.push_back(Weight{0, 1 + i % 3});
        mu.push_back(Weight{1, i % 3 - 1});
    }
    return ModuleVector::monomial({Partition::from_entries(lam), Partition::from_entries(mu), std::uint32_t(n), 1});
}

void BM_ActOmega(benchmark::State& state) {
    const WhittakerModule module(PsiSpec::symbolic());
    const ModuleVector v = tower(int(state.range(0)));
    const Generator d{2, Weight{0, 2}};
    for (auto _ : state) benchmark::DoNotOptimize(module.act(d, v));
}
BENCHMARK(BM_ActOmega)->DenseRange(1, 4);

void BM_ActNegative(benchmark::State& state) {
    const WhittakerModule module(PsiSpec::symbolic());
    const ModuleVector v = tower(int(state.range(0)));
    const Generator d{1, Weight{0, -1}};
    for (auto _ : state) benchmark::DoNotOptimize(module.act(d, v));
}
BENCHMARK(BM_ActNegative)->DenseRange(1, 4);

void BM_Reduce(benchmark::State& state) {
    const PsiSpec spec = PsiSpec::specialized(1, 2, 3);
    const ModuleVector v = tower(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reduce_to_whittaker(v, spec));
}
BENCHMARK(BM_Reduce)->DenseRange(1, 3);

void BM_WhittakerSpace(benchmark::State& state) {
    const PsiSpec spec = PsiSpec::specialized(1, 1, 1);
    Truncation t;
    t.cap = Weight{0, int(state.range(0))};
    t.entries = {Weight{0, 1}, Weight{0, 2}};
    t.kmax = 1;
    t.rmax = 2;
    for (auto _ : state) benchmark::DoNotOptimize(whittaker_space(t, spec));
}
BENCHMARK(BM_WhittakerSpace)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
