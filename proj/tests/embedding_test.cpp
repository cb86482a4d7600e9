#include <doctest.h>

#include <algorithm>

#include "copra/copy_analysis.hpp"
#include "copra/embedding.hpp"
#include "copra/errors.hpp"
#include "copra/generate.hpp"
#include "copra/verify.hpp"

#include "support/builders.hpp"

using namespace copra;

TEST_CASE("embedding enumeration on pinned instances") {
    FiniteBinaryStructure arc(2, {{0, 1}});
    CHECK(embeddings(arc, arc) == std::vector<Embedding>{{0, 1}});

    CHECK(embeddings(complete_graph(2), complete_graph(3)).size() == 6);

    CHECK(embeddings(test::strict_chain(2), test::strict_chain(3)) ==
          std::vector<Embedding>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("copies are the distinct embedding images") {
    CHECK(copies(binary_tree_digraph(1), binary_tree_digraph(2)).copies ==
          std::vector<std::vector<int>>{{0, 1, 2}, {1, 3, 4}, {2, 5, 6}});

    FiniteBinaryStructure s(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(copies(s, s).copies == std::vector<std::vector<int>>{{0, 1, 2, 3}});

    CHECK(copies(complete_graph(2), complete_graph(3)).copies ==
          std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("the enumeration matches the naive reference on random instances") {
    Rng rng(101);
    for (int it = 0; it < 500; ++it) {
        FiniteBinaryStructure pattern = random_structure(rng, rng.range(1, 4), rng.range(5, 85));
        FiniteBinaryStructure host = random_structure(rng, rng.range(1, 6), rng.range(5, 85));
        CHECK(embeddings(pattern, host) == naive_embeddings(pattern, host));
    }
}

TEST_CASE("embedding counts factor through the pattern's automorphisms") {
    Rng rng(109);
    for (int it = 0; it < 100; ++it) {
        FiniteBinaryStructure pattern = random_structure(rng, rng.range(1, 4), rng.range(5, 85));
        FiniteBinaryStructure host = random_structure(rng, rng.range(1, 6), rng.range(5, 85));
        std::size_t automorphisms = embeddings(pattern, pattern).size();
        CopySet cs = copies(pattern, host);
        CHECK(embeddings(pattern, host).size() == cs.copies.size() * automorphisms);
        CHECK(cs.copies.size() <= embeddings(pattern, host).size());
    }
}

TEST_CASE("the search budget is an explicit capacity error") {
    SearchLimits tiny{3};
    CHECK_THROWS_AS(embeddings(test::no_relation(3), test::no_relation(6), tiny),
                    capacity_error);
}

TEST_CASE("component-wise copies of unions on pinned instances") {
    FiniteBinaryStructure arc(2, {{0, 1}});
    CopySet two_arcs = copies_of_union_oracle({arc, arc}, {arc, arc});
    CHECK(two_arcs.copies == std::vector<std::vector<int>>{{0, 1, 2, 3}});

    CopySet k3_in_k34 = copies_of_union_oracle({complete_graph(3)},
                                               {complete_graph(3), complete_graph(4)});
    CHECK(k3_in_k34.copies.size() == 5);

    FiniteBinaryStructure point(1, {});
    CHECK(copies_of_union_oracle({point}, {point}).copies ==
          std::vector<std::vector<int>>{{0}});

    CHECK_THROWS_AS(copies_of_union_oracle({test::no_relation(2)}, {point}), input_error);
    CHECK_THROWS_AS(copies_of_union_oracle({point}, {test::no_relation(2)}), input_error);
}

TEST_CASE("the union oracle agrees with direct enumeration on random instances") {
    Rng rng(103);
    for (int it = 0; it < 60; ++it) {
        std::vector<FiniteBinaryStructure> parts, hosts;
        int k = rng.range(2, 3);
        for (int i = 0; i < k; ++i)
            parts.push_back(random_connected_structure(rng, rng.range(1, 3), 40));
        int m = rng.range(1, 3);
        for (int j = 0; j < m; ++j)
            hosts.push_back(random_connected_structure(rng, rng.range(1, 4), 40));
        CHECK(copies_of_union_oracle(parts, hosts).copies ==
              copies(disjoint_union(parts).structure, disjoint_union(hosts).structure).copies);
    }
}

TEST_CASE("embeddings are invariant under simultaneous complementation") {
    FiniteBinaryStructure arc(2, {{0, 1}});
    FiniteBinaryStructure host(3, {{0, 1}, {1, 2}});
    CHECK(embeddings_complement_check(arc, host));
    CHECK(embeddings(arc, host).size() == 2);

    FiniteBinaryStructure loop(1, {{0, 0}});
    FiniteBinaryStructure diag3(3, {{0, 0}, {1, 1}, {2, 2}});
    CHECK(embeddings_complement_check(loop, diag3));

    Rng rng(107);
    for (int it = 0; it < 80; ++it) {
        FiniteBinaryStructure s = random_structure(rng, rng.range(1, 5), rng.range(5, 95));
        CHECK(embeddings_complement_check(s, s));
    }
}

TEST_CASE("loops are matched exactly") {
    FiniteBinaryStructure loop(1, {{0, 0}});
    FiniteBinaryStructure mixed(2, {{0, 0}});
    CHECK(embeddings(loop, mixed) == std::vector<Embedding>{{0}});
    CHECK(embeddings(FiniteBinaryStructure(1, {}), mixed) == std::vector<Embedding>{{1}});
}
