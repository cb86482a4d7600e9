#include "copra/structure.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include <json.hpp>

#include "copra/errors.hpp"

namespace copra {

namespace {

std::string pair_str(const Pair& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

} // namespace

FiniteBinaryStructure::FiniteBinaryStructure(int size, std::vector<Pair> pairs)
    : size_(size), pairs_(std::move(pairs)) {
    if (size_ < 1)
        throw input_error("structure domain must be nonempty (size >= 1)");
    for (const Pair& p : pairs_) {
        if (p.first < 0 || p.first >= size_ || p.second < 0 || p.second >= size_)
            throw input_error("pair " + pair_str(p) + " is outside the domain 0.." +
                              std::to_string(size_ - 1));
    }
    std::sort(pairs_.begin(), pairs_.end());
    auto dup = std::adjacent_find(pairs_.begin(), pairs_.end());
    if (dup != pairs_.end())
        throw input_error("duplicate pair " + pair_str(*dup));

    stride_ = (size_ + 63) / 64;
    adj_.assign(static_cast<std::size_t>(size_) * stride_, 0);
    for (const Pair& p : pairs_)
        adj_[static_cast<std::size_t>(p.first) * stride_ + p.second / 64] |=
            std::uint64_t{1} << (p.second % 64);
}

int FiniteBinaryStructure::out_degree(int v) const {
    int d = 0;
    for (const Pair& p : pairs_)
        d += p.first == v;
    return d;
}

int FiniteBinaryStructure::in_degree(int v) const {
    int d = 0;
    for (const Pair& p : pairs_)
        d += p.second == v;
    return d;
}

FiniteBinaryStructure FiniteBinaryStructure::from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("size") || !j.contains("pairs"))
        throw input_error("structure JSON must be an object with \"size\" and \"pairs\"");
    if (!j["size"].is_number_integer())
        throw input_error("\"size\" must be an integer");
    std::vector<Pair> pairs;
    for (const auto& e : j["pairs"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw input_error("every pair must be a two-element integer array");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return FiniteBinaryStructure(j["size"].get<int>(), std::move(pairs));
}

std::string FiniteBinaryStructure::to_json_string() const {
    nlohmann::json j;
    j["size"] = size_;
    j["pairs"] = nlohmann::json::array();
    for (const Pair& p : pairs_)
        j["pairs"].push_back({p.first, p.second});
    return j.dump();
}

Partition::Partition(int domain_size, std::vector<std::vector<int>> in_blocks)
    : blocks(std::move(in_blocks)), block_of(domain_size, -1) {
    for (auto& b : blocks) {
        if (b.empty())
            throw input_error("partition blocks must be nonempty");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (int v : blocks[i]) {
            if (v < 0 || v >= domain_size)
                throw input_error("partition element " + std::to_string(v) +
                                  " is outside the domain");
            if (block_of[v] != -1)
                throw input_error("partition blocks overlap at " + std::to_string(v));
            block_of[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < domain_size; ++v)
        if (block_of[v] == -1)
            throw input_error("partition misses element " + std::to_string(v));
}

std::vector<Pair> rs_closure(const FiniteBinaryStructure& s) {
    std::vector<Pair> out;
    out.reserve(s.pairs().size() * 2 + s.size());
    for (int v = 0; v < s.size(); ++v)
        out.emplace_back(v, v);
    for (const Pair& p : s.pairs()) {
        out.push_back(p);
        out.emplace_back(p.second, p.first);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Partition components(const FiniteBinaryStructure& s) {
    UnionFind uf(s.size());
    for (const Pair& p : s.pairs())
        uf.unite(p.first, p.second);
    std::vector<std::vector<int>> groups(s.size());
    for (int v = 0; v < s.size(); ++v)
        groups[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& g : groups)
        if (!g.empty())
            blocks.push_back(std::move(g));
    return Partition(s.size(), std::move(blocks));
}

bool is_connected(const FiniteBinaryStructure& s) {
    return components(s).blocks.size() == 1;
}

FiniteBinaryStructure complement(const FiniteBinaryStructure& s) {
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<std::size_t>(s.size()) * s.size() - s.pairs().size());
    for (int u = 0; u < s.size(); ++u)
        for (int v = 0; v < s.size(); ++v)
            if (!s.related(u, v))
                pairs.emplace_back(u, v);
    return FiniteBinaryStructure(s.size(), std::move(pairs));
}

DisjointUnion disjoint_union(const std::vector<FiniteBinaryStructure>& parts) {
    if (parts.empty())
        throw input_error("disjoint union of an empty list");
    int total = 0;
    std::vector<int> part_of;
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (const Pair& p : parts[i].pairs())
            pairs.emplace_back(p.first + total, p.second + total);
        for (int v = 0; v < parts[i].size(); ++v)
            part_of.push_back(static_cast<int>(i));
        total += parts[i].size();
    }
    return {FiniteBinaryStructure(total, std::move(pairs)), std::move(part_of)};
}

FiniteBinaryStructure induced(const FiniteBinaryStructure& s, const std::vector<int>& subset) {
    if (subset.empty())
        throw input_error("induced substructure on the empty set");
    std::vector<int> a = subset;
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
        throw input_error("induced subset contains a repeated element");
    std::vector<int> new_label(s.size(), -1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] >= s.size())
            throw input_error("induced subset element " + std::to_string(a[i]) +
                              " is outside the domain");
        new_label[a[i]] = static_cast<int>(i);
    }
    std::vector<Pair> pairs;
    for (const Pair& p : s.pairs())
        if (new_label[p.first] != -1 && new_label[p.second] != -1)
            pairs.emplace_back(new_label[p.first], new_label[p.second]);
    return FiniteBinaryStructure(static_cast<int>(a.size()), std::move(pairs));
}

namespace {

// (loop flag, out-degree, in-degree) per vertex; preserved by isomorphisms.
std::vector<std::array<int, 3>> vertex_signatures(const FiniteBinaryStructure& s) {
    std::vector<std::array<int, 3>> sig(s.size(), {0, 0, 0});
    for (int v = 0; v < s.size(); ++v)
        sig[v][0] = s.has_loop(v);
    for (const Pair& p : s.pairs()) {
        ++sig[p.first][1];
        ++sig[p.second][2];
    }
    return sig;
}

bool extend_isomorphism(const FiniteBinaryStructure& s, const FiniteBinaryStructure& t,
                        const std::vector<std::array<int, 3>>& sig_s,
                        const std::vector<std::array<int, 3>>& sig_t,
                        const std::vector<int>& order, std::size_t depth,
                        std::vector<int>& map, std::vector<char>& used) {
    if (depth == order.size())
        return true;
    int u = order[depth];
    for (int v = 0; v < t.size(); ++v) {
        if (used[v] || sig_s[u] != sig_t[v])
            continue;
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d) {
            int w = order[d];
            ok = s.related(u, w) == t.related(v, map[w]) &&
                 s.related(w, u) == t.related(map[w], v);
        }
        if (!ok)
            continue;
        map[u] = v;
        used[v] = 1;
        if (extend_isomorphism(s, t, sig_s, sig_t, order, depth + 1, map, used))
            return true;
        used[v] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteBinaryStructure& s,
                                                 const FiniteBinaryStructure& t,
                                                 int size_cap) {
    if (s.size() > size_cap || t.size() > size_cap)
        throw capacity_error("isomorphism search capped at size " + std::to_string(size_cap) +
                             "; raise the cap to search larger structures");
    if (s.size() != t.size() || s.pairs().size() != t.pairs().size())
        return std::nullopt;

    auto sig_s = vertex_signatures(s);
    auto sig_t = vertex_signatures(t);
    auto sorted_s = sig_s;
    auto sorted_t = sig_t;
    std::sort(sorted_s.begin(), sorted_s.end());
    std::sort(sorted_t.begin(), sorted_t.end());
    if (sorted_s != sorted_t)
        return std::nullopt;

    // Assign most-constrained vertices first.
    std::vector<int> order(s.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = sig_s[a][1] + sig_s[a][2];
        int db = sig_s[b][1] + sig_s[b][2];
        return da != db ? da > db : a < b;
    });

    std::vector<int> map(s.size(), -1);
    std::vector<char> used(t.size(), 0);
    if (extend_isomorphism(s, t, sig_s, sig_t, order, 0, map, used))
        return map;
    return std::nullopt;
}

bool are_isomorphic(const FiniteBinaryStructure& s, const FiniteBinaryStructure& t,
                    int size_cap) {
    return find_isomorphism(s, t, size_cap).has_value();
}

} // namespace copra
