#include <benchmark/benchmark.h>

#include "copra/generate.hpp"
#include "copra/poset.hpp"

namespace {

void BM_SeparativeQuotient(benchmark::State& state) {
    copra::Rng rng(17);
    copra::FinitePoset p = copra::random_poset(rng, static_cast<int>(state.range(0)), 30);
    for (auto _ : state) {
        auto sq = copra::separative_quotient(p);
        benchmark::DoNotOptimize(sq);
    }
}
BENCHMARK(BM_SeparativeQuotient)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_QuotientOfProduct(benchmark::State& state) {
    copra::Rng rng(21);
    copra::FinitePoset p = copra::random_poset(rng, static_cast<int>(state.range(0)), 40);
    copra::FinitePoset q = copra::random_poset(rng, static_cast<int>(state.range(0)), 40);
    for (auto _ : state) {
        auto sq = copra::separative_quotient(copra::product(p, q));
        benchmark::DoNotOptimize(sq);
    }
}
BENCHMARK(BM_QuotientOfProduct)->Arg(4)->Arg(6)->Arg(8);

} // namespace
