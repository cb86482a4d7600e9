#pragma once

#include <vector>

#include "copra/structure.hpp"

namespace copra {

/// A strong embedding of a pattern into a host, stored as the image of each
/// pattern element: injective, and related pairs map to related pairs both
/// ways (loops included).
using Embedding = std::vector<int>;

struct SearchLimits {
    long long max_nodes = 10'000'000;
};

/// Complete, duplicate-free enumeration of Emb(pattern, host), sorted
/// lexicographically as tuples.  Throws capacity_error when the backtracking
/// budget is exhausted.
std::vector<Embedding> embeddings(const FiniteBinaryStructure& pattern,
                                  const FiniteBinaryStructure& host,
                                  const SearchLimits& limits = {});

/// The family of domains of copies of a pattern inside a host, i.e. the
/// distinct images of the embeddings.
struct CopySet {
    FiniteBinaryStructure pattern;
    FiniteBinaryStructure host;
    std::vector<std::vector<int>> copies;  // sorted element lists, in lexicographic order
};

CopySet copies(const FiniteBinaryStructure& pattern, const FiniteBinaryStructure& host,
               const SearchLimits& limits = {});

/// Component-wise computation of the copies of a disjoint union inside a
/// disjoint union: pick a target host part for every pattern part, embed each
/// part there, and accept the assembled image only when images of distinct
/// parts are nowhere related (one-step, either direction, or equal) in the
/// union host.  All parts must be connected.
CopySet copies_of_union_oracle(const std::vector<FiniteBinaryStructure>& parts,
                               const std::vector<FiniteBinaryStructure>& host_parts,
                               const SearchLimits& limits = {});

/// True iff Emb(pattern, host) and Emb(pattern^c, host^c) coincide.
bool embeddings_complement_check(const FiniteBinaryStructure& pattern,
                                 const FiniteBinaryStructure& host,
                                 const SearchLimits& limits = {});

} // namespace copra
