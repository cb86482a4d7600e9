#include <benchmark/benchmark.h>

#include "copra/copy_analysis.hpp"
#include "copra/embedding.hpp"
#include "copra/generate.hpp"

namespace {

void BM_EmbeddingsTriangleIntoRandom(benchmark::State& state) {
    copra::Rng rng(5);
    copra::FiniteBinaryStructure host =
        copra::random_structure(rng, static_cast<int>(state.range(0)), 30);
    copra::FiniteBinaryStructure pattern = copra::complete_graph(3);
    for (auto _ : state) {
        auto embs = copra::embeddings(pattern, host);
        benchmark::DoNotOptimize(embs);
    }
}
BENCHMARK(BM_EmbeddingsTriangleIntoRandom)->Arg(8)->Arg(12)->Arg(16);

void BM_TreeCopies(benchmark::State& state) {
    copra::FiniteBinaryStructure pattern = copra::binary_tree_digraph(1);
    copra::FiniteBinaryStructure host =
        copra::binary_tree_digraph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto cs = copra::copies(pattern, host);
        benchmark::DoNotOptimize(cs);
    }
}
BENCHMARK(BM_TreeCopies)->Arg(3)->Arg(4)->Arg(5);

void BM_PatternIndivisible(benchmark::State& state) {
    copra::Rng rng(9);
    copra::FiniteBinaryStructure host =
        copra::random_structure(rng, static_cast<int>(state.range(0)), 40);
    copra::FiniteBinaryStructure pattern = copra::complete_graph(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(copra::pattern_indivisible(pattern, host));
    }
}
BENCHMARK(BM_PatternIndivisible)->Arg(10)->Arg(14);

} // namespace
