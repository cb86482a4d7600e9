#include <benchmark/benchmark.h>

#include <vector>

#include "copra/forcing_term.hpp"
#include "copra/generate.hpp"
#include "copra/ordinal.hpp"

namespace {

void BM_OrdinalMultiply(benchmark::State& state) {
    copra::Rng rng(33);
    std::vector<copra::OrdinalCNF> pool;
    for (int i = 0; i < 64; ++i)
        pool.push_back(copra::random_ordinal(rng, static_cast<int>(state.range(0)), 4, 9));
    std::size_t i = 0;
    for (auto _ : state) {
        auto r = copra::ord_mul(pool[i % pool.size()], pool[(i + 1) % pool.size()]);
        benchmark::DoNotOptimize(r);
        ++i;
    }
}
BENCHMARK(BM_OrdinalMultiply)->Arg(3)->Arg(6);

void BM_QuotientFormula(benchmark::State& state) {
    copra::Rng rng(35);
    std::vector<copra::OrdinalCNF> pool;
    while (pool.size() < 64) {
        copra::OrdinalCNF a = copra::random_ordinal(rng, 5, 4, 9);
        if (copra::ord_compare(a, copra::OrdinalCNF::omega()) !=
            std::strong_ordering::less)
            pool.push_back(a);
    }
    std::size_t i = 0;
    for (auto _ : state) {
        auto t = copra::sq_formula(pool[i % pool.size()]);
        benchmark::DoNotOptimize(t);
        ++i;
    }
}
BENCHMARK(BM_QuotientFormula)->Arg(0);

} // namespace
