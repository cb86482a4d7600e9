#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace copra {

using Pair = std::pair<int, int>;

/// A finite binary relational structure: a domain 0..size-1 together with an
/// arbitrary set of ordered pairs (loops allowed).  Immutable once built;
/// pairs are kept sorted lexicographically so serialization is canonical.
class FiniteBinaryStructure {
public:
    /// Validates the pair list: every coordinate in range, no duplicates,
    /// size >= 1.  Accepts the pairs in any order.
    FiniteBinaryStructure(int size, std::vector<Pair> pairs);

    /// Parses `{"size": n, "pairs": [[u,v], ...]}`.
    static FiniteBinaryStructure from_json_string(const std::string& text);

    int size() const { return size_; }
    const std::vector<Pair>& pairs() const { return pairs_; }

    bool related(int u, int v) const {
        return adj_[static_cast<std::size_t>(u) * stride_ + v / 64] >> (v % 64) & 1u;
    }
    bool has_loop(int v) const { return related(v, v); }
    int out_degree(int v) const;
    int in_degree(int v) const;

    std::string to_json_string() const;

    bool operator==(const FiniteBinaryStructure& other) const {
        return size_ == other.size_ && pairs_ == other.pairs_;
    }

private:
    int size_ = 0;
    int stride_ = 0;                  // 64-bit words per adjacency row
    std::vector<Pair> pairs_;         // sorted, duplicate-free
    std::vector<std::uint64_t> adj_;  // row-major adjacency bitset
};

/// A partition of the domain 0..n-1 into nonempty blocks.  Blocks are sorted
/// internally and ordered by least element.
struct Partition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;  // element -> block index

    Partition(int domain_size, std::vector<std::vector<int>> blocks);
};

/// The reflexive-symmetric closure of the relation: diagonal + pairs + their
/// inverses, sorted.
std::vector<Pair> rs_closure(const FiniteBinaryStructure& s);

/// Connected components: the classes of the least equivalence relation
/// containing the structure's relation.
Partition components(const FiniteBinaryStructure& s);

bool is_connected(const FiniteBinaryStructure& s);

/// Complement relation on the same domain.  Involution.
FiniteBinaryStructure complement(const FiniteBinaryStructure& s);

struct DisjointUnion {
    FiniteBinaryStructure structure;
    std::vector<int> part_of;  // element of the union -> index of its part
};

/// Disjoint union with consecutive offsets; no cross-part pairs.
DisjointUnion disjoint_union(const std::vector<FiniteBinaryStructure>& parts);

/// Induced substructure on a nonempty subset of the domain, relabeled by the
/// order-preserving bijection onto 0..|subset|-1.
FiniteBinaryStructure induced(const FiniteBinaryStructure& s, const std::vector<int>& subset);

inline constexpr int kDefaultIsoSizeCap = 16;

/// Searches for an isomorphism s -> t (a bijection preserving the relation
/// both ways).  Returns the mapping, or nullopt if the structures are not
/// isomorphic.  Throws capacity_error when either size exceeds `size_cap`.
std::optional<std::vector<int>> find_isomorphism(const FiniteBinaryStructure& s,
                                                 const FiniteBinaryStructure& t,
                                                 int size_cap = kDefaultIsoSizeCap);

bool are_isomorphic(const FiniteBinaryStructure& s, const FiniteBinaryStructure& t,
                    int size_cap = kDefaultIsoSizeCap);

} // namespace copra
