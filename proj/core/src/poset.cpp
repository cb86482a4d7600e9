#include "copra/poset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include <json.hpp>

#include "copra/errors.hpp"

namespace copra {

namespace {

std::size_t words_per_row(int size) { return static_cast<std::size_t>((size + 63) / 64); }

void set_bit(std::vector<std::uint64_t>& rows, int stride, int i, int j) {
    rows[static_cast<std::size_t>(i) * stride + j / 64] |= std::uint64_t{1} << (j % 64);
}

} // namespace

FinitePoset::FinitePoset(int size, const std::vector<Pair>& leq_pairs) : size_(size) {
    if (size_ < 1)
        throw input_error("poset must have at least one element");
    stride_ = static_cast<int>(words_per_row(size_));
    rows_.assign(static_cast<std::size_t>(size_) * stride_, 0);
    for (const Pair& p : leq_pairs) {
        if (p.first < 0 || p.first >= size_ || p.second < 0 || p.second >= size_)
            throw input_error("order pair (" + std::to_string(p.first) + "," +
                              std::to_string(p.second) + ") is outside the domain");
        set_bit(rows_, stride_, p.first, p.second);
    }
    validate();
}

FinitePoset::FinitePoset(int size, std::vector<std::uint64_t> rows, Unchecked)
    : size_(size), stride_(static_cast<int>(words_per_row(size))), rows_(std::move(rows)) {}

void FinitePoset::validate() const {
    for (int i = 0; i < size_; ++i)
        if (!leq(i, i))
            throw input_error("order is not reflexive: missing (" + std::to_string(i) + "," +
                              std::to_string(i) + ")");
    for (int i = 0; i < size_; ++i)
        for (int j = i + 1; j < size_; ++j)
            if (leq(i, j) && leq(j, i))
                throw input_error("order is not antisymmetric: " + std::to_string(i) + " and " +
                                  std::to_string(j) + " are mutually below each other");
    // Transitive iff i <= j implies up(j) is a subset of up(i).
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) {
            if (!leq(i, j))
                continue;
            for (int w = 0; w < stride_; ++w) {
                std::uint64_t above_j = rows_[static_cast<std::size_t>(j) * stride_ + w];
                std::uint64_t above_i = rows_[static_cast<std::size_t>(i) * stride_ + w];
                std::uint64_t missing = above_j & ~above_i;
                if (missing) {
                    int k = w * 64 + std::countr_zero(missing);
                    throw input_error("order is not transitive: " + std::to_string(i) +
                                      " <= " + std::to_string(j) + " <= " + std::to_string(k) +
                                      " but (" + std::to_string(i) + "," + std::to_string(k) +
                                      ") is missing");
                }
            }
        }
}

std::vector<Pair> FinitePoset::relation_pairs() const {
    std::vector<Pair> out;
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j)
            if (leq(i, j))
                out.emplace_back(i, j);
    return out;
}

FinitePoset FinitePoset::from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("size") || !j.contains("leq"))
        throw input_error("poset JSON must be an object with \"size\" and \"leq\"");
    if (!j["size"].is_number_integer())
        throw input_error("\"size\" must be an integer");
    std::vector<Pair> pairs;
    for (const auto& e : j["leq"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw input_error("every order pair must be a two-element integer array");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return FinitePoset(j["size"].get<int>(), pairs);
}

std::string FinitePoset::to_json_string() const {
    nlohmann::json j;
    j["size"] = size_;
    j["leq"] = nlohmann::json::array();
    for (const Pair& p : relation_pairs())
        j["leq"].push_back({p.first, p.second});
    return j.dump();
}

namespace {

void check_element(const FinitePoset& p, int a) {
    if (a < 0 || a >= p.size())
        throw input_error("element " + std::to_string(a) + " is outside the poset");
}

} // namespace

bool compatible(const FinitePoset& p, int a, int b) {
    check_element(p, a);
    check_element(p, b);
    for (int r = 0; r < p.size(); ++r)
        if (p.leq(r, a) && p.leq(r, b))
            return true;
    return false;
}

std::vector<int> atoms(const FinitePoset& p) {
    std::vector<int> out;
    for (int a = 0; a < p.size(); ++a) {
        bool atom = true;
        for (int q = 0; q < p.size() && atom; ++q) {
            if (!p.leq(q, a))
                continue;
            for (int r = 0; r < p.size() && atom; ++r)
                if (p.leq(r, a) && !compatible(p, q, r))
                    atom = false;
        }
        if (atom)
            out.push_back(a);
    }
    return out;
}

bool is_atomic(const FinitePoset& p) {
    return is_dense_subset(p, atoms(p));
}

bool is_atomless(const FinitePoset& p) {
    return atoms(p).empty();
}

bool is_dense_subset(const FinitePoset& p, const std::vector<int>& subset) {
    for (int q = 0; q < p.size(); ++q) {
        bool hit = false;
        for (int s : subset)
            if (p.leq(s, q)) {
                hit = true;
                break;
            }
        if (!hit)
            return false;
    }
    return true;
}

DensityMode density_mode(const FinitePoset& p, const std::vector<int>& subset) {
    for (int s : subset)
        check_element(p, s);
    if (is_dense_subset(p, subset))
        return DensityMode::Dense;
    for (int a = 0; a < p.size(); ++a) {
        bool dense_below = true;
        for (int q = 0; q < p.size() && dense_below; ++q) {
            if (!p.leq(q, a))
                continue;
            bool hit = false;
            for (int s : subset)
                if (p.leq(s, q)) {
                    hit = true;
                    break;
                }
            dense_below = hit;
        }
        if (dense_below)
            return DensityMode::SomewhereDense;
    }
    return DensityMode::NowhereDense;
}

bool sep_leq(const FinitePoset& p, int a, int b) {
    check_element(p, a);
    check_element(p, b);
    for (int r = 0; r < p.size(); ++r) {
        if (!p.leq(r, a))
            continue;
        bool found = false;
        for (int s = 0; s < p.size(); ++s)
            if (p.leq(s, r) && p.leq(s, b)) {
                found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

bool is_separative(const FinitePoset& p) {
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
            if (p.leq(a, b))
                continue;
            bool witness = false;
            for (int r = 0; r < p.size() && !witness; ++r)
                if (p.leq(r, a) && !compatible(p, r, b))
                    witness = true;
            if (!witness)
                return false;
        }
    return true;
}

SeparativeQuotient separative_quotient(const FinitePoset& p) {
    const int n = p.size();
    std::vector<char> sep(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            sep[static_cast<std::size_t>(a) * n + b] = sep_leq(p, a, b);

    // Classes of mutual <=*, numbered by least member in ascending order.
    std::vector<int> class_of(n, -1);
    std::vector<int> representative;
    for (int a = 0; a < n; ++a) {
        if (class_of[a] != -1)
            continue;
        int id = static_cast<int>(representative.size());
        representative.push_back(a);
        class_of[a] = id;
        for (int b = a + 1; b < n; ++b)
            if (class_of[b] == -1 && sep[static_cast<std::size_t>(a) * n + b] &&
                sep[static_cast<std::size_t>(b) * n + a])
                class_of[b] = id;
    }

    const int m = static_cast<int>(representative.size());
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(m) * words_per_row(m), 0);
    int stride = static_cast<int>(words_per_row(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (sep[static_cast<std::size_t>(representative[i]) * n + representative[j]])
                set_bit(rows, stride, i, j);

    return {FinitePoset(m, std::move(rows), FinitePoset::Unchecked{}), std::move(class_of)};
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q, int size_cap) {
    long long total = static_cast<long long>(p.size()) * q.size();
    if (total > size_cap)
        throw capacity_error("product of sizes " + std::to_string(p.size()) + " and " +
                             std::to_string(q.size()) + " exceeds the cap of " +
                             std::to_string(size_cap));
    const int n = static_cast<int>(total);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * words_per_row(n), 0);
    int stride = static_cast<int>(words_per_row(n));
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < q.size(); ++j)
            for (int k = 0; k < p.size(); ++k)
                for (int l = 0; l < q.size(); ++l)
                    if (p.leq(i, k) && q.leq(j, l))
                        set_bit(rows, stride, i * q.size() + j, k * q.size() + l);
    return FinitePoset(n, std::move(rows), FinitePoset::Unchecked{});
}

FinitePoset power(const FinitePoset& p, int k, int size_cap) {
    if (k < 0)
        throw input_error("poset power requires a nonnegative exponent");
    FinitePoset result(1, std::vector<Pair>{{0, 0}});
    for (int i = 0; i < k; ++i)
        result = product(result, p, size_cap);
    return result;
}

namespace {

// (down-set size, up-set size) is preserved by order isomorphisms.
std::vector<std::array<int, 2>> order_signatures(const FinitePoset& p) {
    std::vector<std::array<int, 2>> sig(p.size(), {0, 0});
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (p.leq(i, j)) {
                ++sig[j][0];
                ++sig[i][1];
            }
    return sig;
}

bool extend_order_isomorphism(const FinitePoset& p, const FinitePoset& q,
                              const std::vector<std::array<int, 2>>& sig_p,
                              const std::vector<std::array<int, 2>>& sig_q,
                              const std::vector<int>& order, std::size_t depth,
                              std::vector<int>& map, std::vector<char>& used) {
    if (depth == order.size())
        return true;
    int u = order[depth];
    for (int v = 0; v < q.size(); ++v) {
        if (used[v] || sig_p[u] != sig_q[v])
            continue;
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d) {
            int w = order[d];
            ok = p.leq(u, w) == q.leq(v, map[w]) && p.leq(w, u) == q.leq(map[w], v);
        }
        if (!ok)
            continue;
        map[u] = v;
        used[v] = 1;
        if (extend_order_isomorphism(p, q, sig_p, sig_q, order, depth + 1, map, used))
            return true;
        used[v] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_poset_isomorphism(const FinitePoset& p,
                                                       const FinitePoset& q, int size_cap) {
    if (p.size() > size_cap || q.size() > size_cap)
        throw capacity_error("poset isomorphism search capped at size " +
                             std::to_string(size_cap));
    if (p.size() != q.size())
        return std::nullopt;
    auto sig_p = order_signatures(p);
    auto sig_q = order_signatures(q);
    auto sorted_p = sig_p;
    auto sorted_q = sig_q;
    std::sort(sorted_p.begin(), sorted_p.end());
    std::sort(sorted_q.begin(), sorted_q.end());
    if (sorted_p != sorted_q)
        return std::nullopt;

    std::vector<int> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = sig_p[a][0] + sig_p[a][1];
        int db = sig_p[b][0] + sig_p[b][1];
        return da != db ? da > db : a < b;
    });

    std::vector<int> map(p.size(), -1);
    std::vector<char> used(q.size(), 0);
    if (extend_order_isomorphism(p, q, sig_p, sig_q, order, 0, map, used))
        return map;
    return std::nullopt;
}

bool are_poset_isomorphic(const FinitePoset& p, const FinitePoset& q, int size_cap) {
    return find_poset_isomorphism(p, q, size_cap).has_value();
}

HomogeneityProbe homogeneity_probe(const FinitePoset& p, int iso_cap) {
    HomogeneityProbe probe;

    probe.downwards_directed = true;
    for (int a = 0; a < p.size() && probe.downwards_directed; ++a)
        for (int b = 0; b < p.size() && probe.downwards_directed; ++b)
            if (!compatible(p, a, b))
                probe.downwards_directed = false;

    for (int m = 0; m < p.size(); ++m) {
        bool top = true;
        for (int a = 0; a < p.size() && top; ++a)
            top = p.leq(a, m);
        if (top) {
            probe.largest = m;
            break;
        }
    }

    probe.principal_ideals_isomorphic = true;
    for (int a = 0; a < p.size() && probe.principal_ideals_isomorphic; ++a) {
        std::vector<int> ideal;
        for (int b = 0; b < p.size(); ++b)
            if (p.leq(b, a))
                ideal.push_back(b);
        if (static_cast<int>(ideal.size()) != p.size()) {
            probe.principal_ideals_isomorphic = false;
            break;
        }
        std::vector<Pair> pairs;
        for (std::size_t i = 0; i < ideal.size(); ++i)
            for (std::size_t j = 0; j < ideal.size(); ++j)
                if (p.leq(ideal[i], ideal[j]))
                    pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        FinitePoset sub(static_cast<int>(ideal.size()), pairs);
        probe.principal_ideals_isomorphic = are_poset_isomorphic(p, sub, iso_cap);
    }

    return probe;
}

} // namespace copra
