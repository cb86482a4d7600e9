#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copra/embedding.hpp"
#include "copra/poset.hpp"
#include "copra/structure.hpp"

namespace copra {

/// The family of copies of a pattern inside a host, ordered by inclusion.
struct CopyPoset {
    CopySet copy_set;
    FinitePoset poset;                     // order agrees with inclusion of labels
    std::vector<std::vector<int>> labels;  // poset element -> copy, lexicographic order
};

inline constexpr int kDefaultCopyPosetCap = 4096;

CopyPoset poset_of_copies(const FiniteBinaryStructure& pattern,
                          const FiniteBinaryStructure& host, const SearchLimits& limits = {},
                          int size_cap = kDefaultCopyPosetCap);

inline constexpr int kAvoiderHostCap = 20;

/// The downward-closed family of subsets of the host containing no copy of
/// the pattern, as bitmasks over the host domain.
struct IdealSets {
    int host_size = 0;
    std::vector<std::uint32_t> avoider_masks;  // ascending

    std::vector<std::vector<int>> avoiders() const;
};

/// Enumerates every avoiding subset.  The host is capped at 20 elements
/// because the check must be exact.
IdealSets avoider_sets(const FiniteBinaryStructure& pattern, const FiniteBinaryStructure& host,
                       const SearchLimits& limits = {});

/// True iff the avoiders form a proper ideal: closed under union and not
/// containing the whole host domain (downward closure holds by construction).
bool is_ideal_finite(const IdealSets& ideal);

/// True iff every 2-partition of the host domain has a part containing a
/// copy of the pattern.
bool pattern_indivisible(const FiniteBinaryStructure& pattern,
                         const FiniteBinaryStructure& host, const SearchLimits& limits = {});

enum class RamseyColor { K0, K1, K2, K3 };

const char* ramsey_color_name(RamseyColor c);

/// The four-way coloring of unordered pairs of an irreflexive structure:
/// K0 no arc, K1 both arcs, K2 a single arc pointing up the domain order,
/// K3 a single arc pointing down.
struct RamseyColoring {
    int domain_size = 0;
    std::vector<RamseyColor> colors;  // indexed by pair_index

    static std::size_t pair_index(int x, int y);  // x != y, symmetric
    RamseyColor color(int x, int y) const { return colors[pair_index(x, y)]; }
};

/// Requires a loop-free structure; callers holding a reflexive relation
/// should strip the diagonal first.
RamseyColoring ramsey_coloring(const FiniteBinaryStructure& s);

struct HomogeneousSet {
    std::vector<int> elements;
    RamseyColor color;
};

/// Lexicographically least k-subset whose pairs all share one color, or
/// nullopt when none exists at this size.  Subsets of size < 2 are vacuously
/// monochromatic (reported as K0).
std::optional<HomogeneousSet> homogeneous_subset(const RamseyColoring& coloring, int k);

/// The eight families whose countable members have every infinite subset
/// inducing a copy of the whole structure.
enum class MaximalFamily {
    EmptyRelation,
    CompleteGraph,
    StrictOrder,
    InverseStrictOrder,
    Diagonal,
    FullRelation,
    ReflexiveOrder,
    InverseReflexiveOrder,
};

inline constexpr MaximalFamily kAllMaximalFamilies[] = {
    MaximalFamily::EmptyRelation,     MaximalFamily::CompleteGraph,
    MaximalFamily::StrictOrder,       MaximalFamily::InverseStrictOrder,
    MaximalFamily::Diagonal,          MaximalFamily::FullRelation,
    MaximalFamily::ReflexiveOrder,    MaximalFamily::InverseReflexiveOrder,
};

const char* maximal_family_name(MaximalFamily f);
std::optional<MaximalFamily> maximal_family_from_name(const std::string& name);

/// The n-element member of the family.
FiniteBinaryStructure maximal_prefix(MaximalFamily family, int n);

/// True iff every nonempty subset of the n-element prefix induces a
/// structure isomorphic to the same-size prefix of the same family.
bool maximal_prefix_check(MaximalFamily family, int n);

/// The generic form of the same check for an arbitrary structure: every
/// m-subset must induce a structure isomorphic to the one induced by the
/// first m elements.
bool is_prefix_hereditary(const FiniteBinaryStructure& s);

// Small builders for the catalog and the verification suites.
FiniteBinaryStructure binary_tree_digraph(int depth);  // 2^(depth+1)-1 nodes, arcs parent->child
FiniteBinaryStructure path_graph(int n);               // symmetric edges i ~ i+1
FiniteBinaryStructure cycle_graph(int n);
FiniteBinaryStructure complete_graph(int n);

} // namespace copra
