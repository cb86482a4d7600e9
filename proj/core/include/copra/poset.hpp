#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copra/structure.hpp"  // for Pair

namespace copra {

struct SeparativeQuotient;

/// An explicit finite partial order on 0..size-1.  Construction validates
/// reflexivity, antisymmetry and transitivity and fails loudly on any
/// violation; there is no silent repair.
class FinitePoset {
public:
    /// Builds from the full list of related pairs (i,j) meaning i <= j.  The
    /// diagonal must be present.
    FinitePoset(int size, const std::vector<Pair>& leq_pairs);

    /// Parses `{"size": n, "leq": [[i,j], ...]}`.
    static FinitePoset from_json_string(const std::string& text);

    int size() const { return size_; }

    bool leq(int i, int j) const {
        return rows_[static_cast<std::size_t>(i) * stride_ + j / 64] >> (j % 64) & 1u;
    }

    /// All pairs (i,j) with i <= j, sorted lexicographically.
    std::vector<Pair> relation_pairs() const;

    std::string to_json_string() const;

    bool operator==(const FinitePoset& other) const {
        return size_ == other.size_ && rows_ == other.rows_;
    }

private:
    struct Unchecked {};
    FinitePoset(int size, std::vector<std::uint64_t> rows, Unchecked);
    void validate() const;

    int size_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> rows_;

    friend FinitePoset product(const FinitePoset&, const FinitePoset&, int);
    friend SeparativeQuotient separative_quotient(const FinitePoset&);
};

/// True iff some r lies below both p and q.
bool compatible(const FinitePoset& p, int a, int b);

/// Elements below which every two elements are compatible.
std::vector<int> atoms(const FinitePoset& p);
bool is_atomic(const FinitePoset& p);
bool is_atomless(const FinitePoset& p);

/// True iff every element has a member of `subset` below it.
bool is_dense_subset(const FinitePoset& p, const std::vector<int>& subset);

enum class DensityMode { Dense, SomewhereDense, NowhereDense };
DensityMode density_mode(const FinitePoset& p, const std::vector<int>& subset);

/// The separative relation: a <=* b iff below every r <= a some s <= r lies
/// below b.  A pre-order extending <=.
bool sep_leq(const FinitePoset& p, int a, int b);

/// True iff whenever a is not <= b, some r <= a is incompatible with b.
bool is_separative(const FinitePoset& p);

struct SeparativeQuotient {
    FinitePoset quotient;       // classes of mutual <=*, numbered by least member
    std::vector<int> class_of;  // element -> quotient element
};

SeparativeQuotient separative_quotient(const FinitePoset& p);

inline constexpr int kDefaultProductCap = 4096;

/// Coordinatewise order on the cartesian product; element (i,j) has index
/// i*|q|+j.  Throws capacity_error when the result would exceed `size_cap`.
FinitePoset product(const FinitePoset& p, const FinitePoset& q,
                    int size_cap = kDefaultProductCap);

/// k-fold product; k = 0 gives the one-point order.
FinitePoset power(const FinitePoset& p, int k, int size_cap = kDefaultProductCap);

inline constexpr int kDefaultPosetIsoCap = 12;

/// Order-isomorphism witness, or nullopt.  Throws capacity_error beyond the cap.
std::optional<std::vector<int>> find_poset_isomorphism(const FinitePoset& p,
                                                       const FinitePoset& q,
                                                       int size_cap = kDefaultPosetIsoCap);

bool are_poset_isomorphic(const FinitePoset& p, const FinitePoset& q,
                          int size_cap = kDefaultPosetIsoCap);

/// Finite probe for the homogeneity property (largest element and every
/// principal ideal order-isomorphic to the whole poset).  A finite poset can
/// only satisfy it when it is a singleton.
struct HomogeneityProbe {
    bool downwards_directed = false;
    std::optional<int> largest;
    bool principal_ideals_isomorphic = false;

    bool homogeneous() const { return largest.has_value() && principal_ideals_isomorphic; }
};

HomogeneityProbe homogeneity_probe(const FinitePoset& p, int iso_cap = kDefaultPosetIsoCap);

} // namespace copra
