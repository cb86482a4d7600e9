#include "copra/copy_analysis.hpp"

#include <algorithm>

#include "copra/errors.hpp"

namespace copra {

CopyPoset poset_of_copies(const FiniteBinaryStructure& pattern,
                          const FiniteBinaryStructure& host, const SearchLimits& limits,
                          int size_cap) {
    CopySet cs = copies(pattern, host, limits);
    if (static_cast<long long>(cs.copies.size()) > size_cap)
        throw capacity_error("poset of copies would have " + std::to_string(cs.copies.size()) +
                             " elements, beyond the cap of " + std::to_string(size_cap));
    if (cs.copies.empty())
        throw input_error("the pattern has no copies in the host; the poset of copies is empty");

    const int n = static_cast<int>(cs.copies.size());
    std::vector<Pair> leq_pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::includes(cs.copies[j].begin(), cs.copies[j].end(), cs.copies[i].begin(),
                              cs.copies[i].end()))
                leq_pairs.emplace_back(i, j);
    FinitePoset poset(n, leq_pairs);
    std::vector<std::vector<int>> labels = cs.copies;
    return {std::move(cs), std::move(poset), std::move(labels)};
}

namespace {

// copy_superset[mask] = 1 iff some copy of the pattern lies inside mask.
std::vector<char> copy_superset_table(const FiniteBinaryStructure& pattern,
                                      const FiniteBinaryStructure& host,
                                      const SearchLimits& limits) {
    if (host.size() > kAvoiderHostCap)
        throw capacity_error("subset enumeration capped at host size " +
                             std::to_string(kAvoiderHostCap));
    CopySet cs = copies(pattern, host, limits);
    std::vector<char> table(std::size_t{1} << host.size(), 0);
    for (const auto& copy : cs.copies) {
        std::uint32_t mask = 0;
        for (int v : copy)
            mask |= std::uint32_t{1} << v;
        table[mask] = 1;
    }
    const std::uint32_t full = (std::uint32_t{1} << host.size()) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (table[mask])
            continue;
        for (int b = 0; b < host.size() && !table[mask]; ++b)
            if (mask >> b & 1u)
                table[mask] = table[mask ^ (std::uint32_t{1} << b)];
    }
    return table;
}

} // namespace

IdealSets avoider_sets(const FiniteBinaryStructure& pattern, const FiniteBinaryStructure& host,
                       const SearchLimits& limits) {
    std::vector<char> covered = copy_superset_table(pattern, host, limits);
    IdealSets out;
    out.host_size = host.size();
    for (std::uint32_t mask = 0; mask < covered.size(); ++mask)
        if (!covered[mask])
            out.avoider_masks.push_back(mask);
    return out;
}

std::vector<std::vector<int>> IdealSets::avoiders() const {
    std::vector<std::vector<int>> out;
    out.reserve(avoider_masks.size());
    for (std::uint32_t mask : avoider_masks) {
        std::vector<int> set;
        for (int b = 0; b < host_size; ++b)
            if (mask >> b & 1u)
                set.push_back(b);
        out.push_back(std::move(set));
    }
    return out;
}

bool is_ideal_finite(const IdealSets& ideal) {
    const std::uint32_t full = (std::uint32_t{1} << ideal.host_size) - 1;
    std::vector<char> avoid(std::size_t{1} << ideal.host_size, 0);
    for (std::uint32_t mask : ideal.avoider_masks)
        avoid[mask] = 1;
    if (avoid[full])
        return false;  // not proper

    // Union closure on the maximal avoiders settles it for the whole family.
    std::vector<std::uint32_t> maximal;
    for (std::uint32_t mask : ideal.avoider_masks) {
        bool is_max = true;
        for (int b = 0; b < ideal.host_size && is_max; ++b)
            if (!(mask >> b & 1u) && avoid[mask | (std::uint32_t{1} << b)])
                is_max = false;
        if (is_max)
            maximal.push_back(mask);
    }
    for (std::size_t i = 0; i < maximal.size(); ++i)
        for (std::size_t j = i + 1; j < maximal.size(); ++j)
            if (!avoid[maximal[i] | maximal[j]])
                return false;
    return true;
}

bool pattern_indivisible(const FiniteBinaryStructure& pattern,
                         const FiniteBinaryStructure& host, const SearchLimits& limits) {
    std::vector<char> covered = copy_superset_table(pattern, host, limits);
    const std::uint32_t full = (std::uint32_t{1} << host.size()) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask)
        if (!covered[mask] && !covered[full & ~mask])
            return false;
    return true;
}

const char* ramsey_color_name(RamseyColor c) {
    switch (c) {
        case RamseyColor::K0: return "K0";
        case RamseyColor::K1: return "K1";
        case RamseyColor::K2: return "K2";
        case RamseyColor::K3: return "K3";
    }
    return "?";
}

std::size_t RamseyColoring::pair_index(int x, int y) {
    if (x > y)
        std::swap(x, y);
    return static_cast<std::size_t>(y) * (y - 1) / 2 + x;
}

RamseyColoring ramsey_coloring(const FiniteBinaryStructure& s) {
    for (int v = 0; v < s.size(); ++v)
        if (s.has_loop(v))
            throw input_error("the pair coloring needs a loop-free structure; strip the "
                              "diagonal first (loop at " + std::to_string(v) + ")");
    RamseyColoring out;
    out.domain_size = s.size();
    out.colors.resize(static_cast<std::size_t>(s.size()) * (s.size() - 1) / 2);
    for (int y = 0; y < s.size(); ++y)
        for (int x = 0; x < y; ++x) {
            bool up = s.related(x, y);
            bool down = s.related(y, x);
            RamseyColor c = !up && !down ? RamseyColor::K0
                          : up && down   ? RamseyColor::K1
                          : up           ? RamseyColor::K2
                                         : RamseyColor::K3;
            out.colors[RamseyColoring::pair_index(x, y)] = c;
        }
    return out;
}

namespace {

bool extend_monochromatic(const RamseyColoring& coloring, RamseyColor c, int k,
                          std::vector<int>& chosen, int next) {
    if (static_cast<int>(chosen.size()) == k)
        return true;
    for (int v = next; v < coloring.domain_size; ++v) {
        bool ok = true;
        for (int u : chosen)
            if (coloring.color(u, v) != c) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        chosen.push_back(v);
        if (extend_monochromatic(coloring, c, k, chosen, v + 1))
            return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<HomogeneousSet> homogeneous_subset(const RamseyColoring& coloring, int k) {
    if (k < 0)
        throw input_error("subset size must be nonnegative");
    if (k > coloring.domain_size)
        return std::nullopt;
    if (k < 2) {
        std::vector<int> h;
        for (int v = 0; v < k; ++v)
            h.push_back(v);
        return HomogeneousSet{std::move(h), RamseyColor::K0};
    }
    std::optional<HomogeneousSet> best;
    for (RamseyColor c : {RamseyColor::K0, RamseyColor::K1, RamseyColor::K2, RamseyColor::K3}) {
        std::vector<int> chosen;
        if (extend_monochromatic(coloring, c, k, chosen, 0))
            if (!best || chosen < best->elements)
                best = HomogeneousSet{std::move(chosen), c};
    }
    return best;
}

const char* maximal_family_name(MaximalFamily f) {
    switch (f) {
        case MaximalFamily::EmptyRelation: return "empty";
        case MaximalFamily::CompleteGraph: return "complete";
        case MaximalFamily::StrictOrder: return "lt";
        case MaximalFamily::InverseStrictOrder: return "gt";
        case MaximalFamily::Diagonal: return "diag";
        case MaximalFamily::FullRelation: return "full";
        case MaximalFamily::ReflexiveOrder: return "le";
        case MaximalFamily::InverseReflexiveOrder: return "ge";
    }
    return "?";
}

std::optional<MaximalFamily> maximal_family_from_name(const std::string& name) {
    for (MaximalFamily f : kAllMaximalFamilies)
        if (name == maximal_family_name(f))
            return f;
    return std::nullopt;
}

FiniteBinaryStructure maximal_prefix(MaximalFamily family, int n) {
    if (n < 1)
        throw input_error("prefix size must be at least 1");
    std::vector<Pair> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool in = false;
            switch (family) {
                case MaximalFamily::EmptyRelation: in = false; break;
                case MaximalFamily::CompleteGraph: in = i != j; break;
                case MaximalFamily::StrictOrder: in = i < j; break;
                case MaximalFamily::InverseStrictOrder: in = i > j; break;
                case MaximalFamily::Diagonal: in = i == j; break;
                case MaximalFamily::FullRelation: in = true; break;
                case MaximalFamily::ReflexiveOrder: in = i <= j; break;
                case MaximalFamily::InverseReflexiveOrder: in = i >= j; break;
            }
            if (in)
                pairs.emplace_back(i, j);
        }
    return FiniteBinaryStructure(n, std::move(pairs));
}

bool is_prefix_hereditary(const FiniteBinaryStructure& s) {
    if (s.size() > 12)
        throw capacity_error("prefix-hereditary check capped at 12 elements");
    // Same-size prefixes, precomputed once.
    std::vector<FiniteBinaryStructure> prefixes;
    for (int m = 1; m <= s.size(); ++m) {
        std::vector<int> front(m);
        for (int i = 0; i < m; ++i)
            front[i] = i;
        prefixes.push_back(induced(s, front));
    }
    const std::uint32_t full = (std::uint32_t{1} << s.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::vector<int> subset;
        for (int b = 0; b < s.size(); ++b)
            if (mask >> b & 1u)
                subset.push_back(b);
        const FiniteBinaryStructure& expected = prefixes[subset.size() - 1];
        if (!are_isomorphic(induced(s, subset), expected, s.size()))
            return false;
    }
    return true;
}

bool maximal_prefix_check(MaximalFamily family, int n) {
    if (n < 1)
        throw input_error("prefix size must be at least 1");
    if (n > 12)
        throw capacity_error("prefix check capped at 12 elements");
    return is_prefix_hereditary(maximal_prefix(family, n));
}

FiniteBinaryStructure binary_tree_digraph(int depth) {
    if (depth < 0)
        throw input_error("tree depth must be nonnegative");
    const int n = (1 << (depth + 1)) - 1;
    std::vector<Pair> pairs;
    for (int v = 0; 2 * v + 2 < n; ++v) {
        pairs.emplace_back(v, 2 * v + 1);
        pairs.emplace_back(v, 2 * v + 2);
    }
    return FiniteBinaryStructure(n, std::move(pairs));
}

FiniteBinaryStructure path_graph(int n) {
    std::vector<Pair> pairs;
    for (int i = 0; i + 1 < n; ++i) {
        pairs.emplace_back(i, i + 1);
        pairs.emplace_back(i + 1, i);
    }
    return FiniteBinaryStructure(n, std::move(pairs));
}

FiniteBinaryStructure cycle_graph(int n) {
    if (n < 3)
        throw input_error("cycle needs at least 3 vertices");
    std::vector<Pair> pairs;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        pairs.emplace_back(i, j);
        pairs.emplace_back(j, i);
    }
    return FiniteBinaryStructure(n, std::move(pairs));
}

FiniteBinaryStructure complete_graph(int n) {
    return maximal_prefix(MaximalFamily::CompleteGraph, n);
}

} // namespace copra
