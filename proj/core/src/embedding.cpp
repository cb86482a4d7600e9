#include "copra/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "copra/errors.hpp"

namespace copra {

namespace {

struct EmbeddingSearch {
    const FiniteBinaryStructure& pattern;
    const FiniteBinaryStructure& host;
    long long budget;
    long long nodes = 0;
    std::vector<int> order;    // static assignment order, busiest vertices first
    std::vector<int> map;      // pattern -> host, -1 while unassigned
    std::vector<char> used;    // host occupancy
    std::vector<Embedding> out;

    EmbeddingSearch(const FiniteBinaryStructure& p, const FiniteBinaryStructure& h,
                    long long budget)
        : pattern(p), host(h), budget(budget), map(p.size(), -1), used(h.size(), 0) {
        order.resize(p.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> degree(p.size(), 0);
        for (const Pair& e : p.pairs()) {
            ++degree[e.first];
            ++degree[e.second];
        }
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return degree[a] != degree[b] ? degree[a] > degree[b] : a < b;
        });
    }

    void run() {
        if (pattern.size() > host.size())
            return;
        extend(0);
        std::sort(out.begin(), out.end());
    }

    void extend(std::size_t depth) {
        if (depth == order.size()) {
            out.push_back(map);
            return;
        }
        int u = order[depth];
        for (int v = 0; v < host.size(); ++v) {
            if (used[v] || pattern.has_loop(u) != host.has_loop(v))
                continue;
            if (++nodes > budget)
                throw capacity_error(
                    "embedding search exceeded the node budget of " + std::to_string(budget) +
                    "; the instance is beyond desk scale");
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                int w = order[d];
                ok = pattern.related(u, w) == host.related(v, map[w]) &&
                     pattern.related(w, u) == host.related(map[w], v);
            }
            if (!ok)
                continue;
            map[u] = v;
            used[v] = 1;
            extend(depth + 1);
            used[v] = 0;
            map[u] = -1;
        }
    }
};

} // namespace

std::vector<Embedding> embeddings(const FiniteBinaryStructure& pattern,
                                  const FiniteBinaryStructure& host,
                                  const SearchLimits& limits) {
    EmbeddingSearch search(pattern, host, limits.max_nodes);
    search.run();
    return std::move(search.out);
}

CopySet copies(const FiniteBinaryStructure& pattern, const FiniteBinaryStructure& host,
               const SearchLimits& limits) {
    std::set<std::vector<int>> images;
    for (const Embedding& f : embeddings(pattern, host, limits)) {
        std::vector<int> image = f;
        std::sort(image.begin(), image.end());
        images.insert(std::move(image));
    }
    return {pattern, host, {images.begin(), images.end()}};
}

namespace {

// One-step relatedness in the reflexive-symmetric closure.
bool rs_related(const FiniteBinaryStructure& s, int a, int b) {
    return a == b || s.related(a, b) || s.related(b, a);
}

} // namespace

CopySet copies_of_union_oracle(const std::vector<FiniteBinaryStructure>& parts,
                               const std::vector<FiniteBinaryStructure>& host_parts,
                               const SearchLimits& limits) {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (!is_connected(parts[i]))
            throw input_error("pattern part " + std::to_string(i) + " is not connected");
    for (std::size_t j = 0; j < host_parts.size(); ++j)
        if (!is_connected(host_parts[j]))
            throw input_error("host part " + std::to_string(j) + " is not connected");

    DisjointUnion pattern_union = disjoint_union(parts);
    DisjointUnion host_union = disjoint_union(host_parts);

    std::vector<int> host_offset(host_parts.size(), 0);
    for (std::size_t j = 1; j < host_parts.size(); ++j)
        host_offset[j] = host_offset[j - 1] + host_parts[j - 1].size();

    // Per-part embedding lists for every choice of target host part.
    std::vector<std::vector<std::vector<Embedding>>> emb(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        emb[i].resize(host_parts.size());
        for (std::size_t j = 0; j < host_parts.size(); ++j)
            emb[i][j] = embeddings(parts[i], host_parts[j], limits);
    }

    const FiniteBinaryStructure& h = host_union.structure;
    std::set<std::vector<int>> images;
    std::vector<int> target(parts.size(), 0);           // part -> host part
    std::vector<std::vector<int>> global(parts.size()); // per-part image in union coordinates

    // Images of two distinct parts may never touch the same rs-edge of the
    // union host; checked element-wise so arbitrary hosts stay valid.
    auto cross_ok = [&](std::size_t fresh) {
        for (std::size_t i = 0; i < fresh; ++i)
            for (int a : global[i])
                for (int b : global[fresh])
                    if (rs_related(h, a, b))
                        return false;
        return true;
    };

    auto place = [&](auto&& self, std::size_t level) -> void {
        if (level == parts.size()) {
            std::vector<int> image;
            for (const auto& g : global)
                image.insert(image.end(), g.begin(), g.end());
            std::sort(image.begin(), image.end());
            images.insert(std::move(image));
            return;
        }
        for (const Embedding& g : emb[level][target[level]]) {
            global[level].clear();
            for (int v : g)
                global[level].push_back(v + host_offset[target[level]]);
            if (cross_ok(level))
                self(self, level + 1);
        }
    };

    for (;;) {
        place(place, 0);
        std::size_t k = 0;  // advance the part->host-part assignment, mixed radix
        while (k < target.size() && ++target[k] == static_cast<int>(host_parts.size())) {
            target[k] = 0;
            ++k;
        }
        if (k == target.size())
            break;
    }

    return {std::move(pattern_union.structure), std::move(host_union.structure),
            {images.begin(), images.end()}};
}

bool embeddings_complement_check(const FiniteBinaryStructure& pattern,
                                 const FiniteBinaryStructure& host,
                                 const SearchLimits& limits) {
    return embeddings(pattern, host, limits) ==
           embeddings(complement(pattern), complement(host), limits);
}

} // namespace copra
