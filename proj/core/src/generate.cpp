#include "copra/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace copra {

FiniteBinaryStructure random_structure(Rng& rng, int size, int density_percent) {
    std::vector<Pair> pairs;
    for (int u = 0; u < size; ++u)
        for (int v = 0; v < size; ++v)
            if (rng.chance(density_percent))
                pairs.emplace_back(u, v);
    return FiniteBinaryStructure(size, std::move(pairs));
}

FiniteBinaryStructure random_connected_structure(Rng& rng, int size, int density_percent) {
    std::set<Pair> pairs;
    for (int u = 0; u < size; ++u)
        for (int v = 0; v < size; ++v)
            if (rng.chance(density_percent))
                pairs.emplace(u, v);
    // Random spanning arcs: attach each vertex to an earlier one.
    for (int v = 1; v < size; ++v) {
        int u = rng.range(0, v - 1);
        if (rng.chance(50))
            pairs.emplace(u, v);
        else
            pairs.emplace(v, u);
    }
    return FiniteBinaryStructure(size, {pairs.begin(), pairs.end()});
}

namespace {

std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.range(0, i)]);
    return perm;
}

} // namespace

FiniteBinaryStructure random_relabel(Rng& rng, const FiniteBinaryStructure& s) {
    std::vector<int> perm = random_permutation(rng, s.size());
    std::vector<Pair> pairs;
    pairs.reserve(s.pairs().size());
    for (const Pair& p : s.pairs())
        pairs.emplace_back(perm[p.first], perm[p.second]);
    return FiniteBinaryStructure(s.size(), std::move(pairs));
}

FinitePoset random_poset(Rng& rng, int size, int edge_percent) {
    std::vector<int> perm = random_permutation(rng, size);
    std::vector<std::vector<char>> leq(size, std::vector<char>(size, 0));
    for (int i = 0; i < size; ++i)
        leq[i][i] = 1;
    // Sprinkle i < j along the permutation order, then close transitively.
    for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b)
            if (rng.chance(edge_percent))
                leq[perm[a]][perm[b]] = 1;
    for (int k = 0; k < size; ++k)
        for (int i = 0; i < size; ++i)
            if (leq[i][k])
                for (int j = 0; j < size; ++j)
                    if (leq[k][j])
                        leq[i][j] = 1;
    std::vector<Pair> pairs;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (leq[i][j])
                pairs.emplace_back(i, j);
    return FinitePoset(size, pairs);
}

FinitePoset random_relabel(Rng& rng, const FinitePoset& p) {
    std::vector<int> perm = random_permutation(rng, p.size());
    std::vector<Pair> pairs;
    for (const Pair& e : p.relation_pairs())
        pairs.emplace_back(perm[e.first], perm[e.second]);
    return FinitePoset(p.size(), pairs);
}

OrdinalCNF random_ordinal(Rng& rng, int max_exponent, int max_terms, int max_coeff) {
    std::vector<int> exponents;
    int terms = rng.range(0, max_terms);
    for (int i = 0; i < terms; ++i)
        exponents.push_back(rng.range(0, max_exponent));
    std::sort(exponents.rbegin(), exponents.rend());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    std::vector<OrdinalCNF::Term> out;
    for (int e : exponents)
        out.emplace_back(OrdinalCNF::natural(static_cast<std::uint64_t>(e)),
                         static_cast<std::uint64_t>(rng.range(1, max_coeff)));
    return OrdinalCNF::from_terms(std::move(out));
}

} // namespace copra
