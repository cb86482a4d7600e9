#pragma once

#include <cstdint>

#include "copra/ordinal.hpp"
#include "copra/poset.hpp"
#include "copra/structure.hpp"

namespace copra {

/// Small deterministic generator (splitmix64) so randomized suites reproduce
/// bit-for-bit across platforms for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// True with probability percent/100.
    bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

private:
    std::uint64_t state_;
};

/// Random structure with each ordered pair present with the given percentage.
FiniteBinaryStructure random_structure(Rng& rng, int size, int density_percent);

/// Random connected structure: edges are sprinkled and a random spanning
/// arc set is added on top.
FiniteBinaryStructure random_connected_structure(Rng& rng, int size, int density_percent);

/// Relabels the structure by a random permutation; the result is isomorphic.
FiniteBinaryStructure random_relabel(Rng& rng, const FiniteBinaryStructure& s);

/// Random partial order: a sprinkled strict order on a random permutation,
/// transitively closed.
FinitePoset random_poset(Rng& rng, int size, int edge_percent);

FinitePoset random_relabel(Rng& rng, const FinitePoset& p);

/// Random ordinal below w^(max_exponent+1) with at most max_terms terms and
/// coefficients in [1, max_coeff].
OrdinalCNF random_ordinal(Rng& rng, int max_exponent, int max_terms, int max_coeff);

} // namespace copra
