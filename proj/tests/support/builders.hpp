#pragma once

#include <vector>

#include "copra/poset.hpp"
#include "copra/structure.hpp"

namespace copra::test {

// strict linear order 0 < 1 < ... < n-1
inline FiniteBinaryStructure strict_chain(int n) {
    std::vector<Pair> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    return FiniteBinaryStructure(n, pairs);
}

inline FiniteBinaryStructure no_relation(int n) {
    return FiniteBinaryStructure(n, {});
}

// poset from a cover/comparability list, closed reflexively and transitively
inline FinitePoset make_poset(int n, std::vector<Pair> below) {
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        leq[i][i] = 1;
    for (const Pair& p : below)
        leq[p.first][p.second] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq[i][k])
                for (int j = 0; j < n; ++j)
                    if (leq[k][j])
                        leq[i][j] = 1;
    std::vector<Pair> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq[i][j])
                pairs.emplace_back(i, j);
    return FinitePoset(n, pairs);
}

inline FinitePoset chain_poset(int n) {
    std::vector<Pair> below;
    for (int i = 0; i + 1 < n; ++i)
        below.emplace_back(i, i + 1);
    return make_poset(n, below);
}

inline FinitePoset antichain_poset(int n) {
    return make_poset(n, {});
}

// bottom 0, middles 1 and 2, top 3
inline FinitePoset diamond_poset() {
    return make_poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

// a, b incomparable, both below the top: elements a=0, b=1, top=2
inline FinitePoset vee_poset() {
    return make_poset(3, {{0, 2}, {1, 2}});
}

} // namespace copra::test
