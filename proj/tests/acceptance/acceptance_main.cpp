// Acceptance suite: each numbered criterion prints one [PASS]/[FAIL] line.
// The binary exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "copra/classifier.hpp"
#include "copra/copy_analysis.hpp"
#include "copra/embedding.hpp"
#include "copra/forcing_term.hpp"
#include "copra/generate.hpp"
#include "copra/ordinal.hpp"
#include "copra/poset.hpp"
#include "copra/structure.hpp"
#include "copra/verify.hpp"

#include "../support/ordinal_oracle.hpp"

using namespace copra;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("[%s] %d. %s%s%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok)
        ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string describe_structure(const FiniteBinaryStructure& s) {
    std::string out = "size " + std::to_string(s.size()) + " pairs {";
    for (std::size_t i = 0; i < s.pairs().size(); ++i) {
        if (i)
            out += ",";
        out += "(" + std::to_string(s.pairs()[i].first) + "," +
               std::to_string(s.pairs()[i].second) + ")";
    }
    return out + "}";
}

// 1. component-wise union copies against direct enumeration
void criterion_union_oracle() {
    auto start = std::chrono::steady_clock::now();
    Rng rng(1001);
    int bad = 0;
    const int samples = 200;
    for (int it = 0; it < samples; ++it) {
        std::vector<FiniteBinaryStructure> parts, hosts;
        int k = rng.range(2, 3);
        for (int i = 0; i < k; ++i)
            parts.push_back(random_connected_structure(rng, rng.range(1, 4), rng.range(10, 70)));
        int m = rng.range(2, 3);
        for (int j = 0; j < m; ++j)
            hosts.push_back(random_connected_structure(rng, rng.range(1, 4), rng.range(10, 70)));
        CopySet oracle = copies_of_union_oracle(parts, hosts);
        CopySet direct =
            copies(disjoint_union(parts).structure, disjoint_union(hosts).structure);
        if (oracle.copies != direct.copies)
            ++bad;
    }
    double secs = seconds_since(start);
    report(1, "union-copy oracle equals direct enumeration (200 instances)",
           bad == 0 && secs < 60.0,
           std::to_string(bad) + " mismatches, " + std::to_string(secs) + "s");
}

// 2. separative-quotient laws
void criterion_quotient_laws() {
    auto start = std::chrono::steady_clock::now();
    Rng rng(1002);
    int bad = 0;
    const int samples = 500;
    for (int it = 0; it < samples; ++it) {
        FinitePoset p = random_poset(rng, rng.range(1, 6), rng.range(10, 80));
        FinitePoset q = random_poset(rng, rng.range(1, 6), rng.range(10, 80));

        if (!is_separative(separative_quotient(p).quotient))
            ++bad;
        FinitePoset relabeled = random_relabel(rng, p);
        if (!are_poset_isomorphic(separative_quotient(p).quotient,
                                  separative_quotient(relabeled).quotient, 16))
            ++bad;
        FinitePoset lhs = separative_quotient(product(p, q)).quotient;
        FinitePoset rhs =
            product(separative_quotient(p).quotient, separative_quotient(q).quotient);
        if (!are_poset_isomorphic(lhs, rhs, 40))
            ++bad;
    }
    double secs = seconds_since(start);
    report(2, "separative-quotient laws on 500 random posets", bad == 0 && secs < 60.0,
           std::to_string(bad) + " violations, " + std::to_string(secs) + "s");
}

// 3. copies of binary tree digraphs are the truncated principal subtrees
void criterion_tree_copies() {
    bool ok = true;
    std::string detail;
    for (int d = 1; d <= 2; ++d)
        for (int depth_host = d + 1; depth_host <= 4; ++depth_host) {
            FiniteBinaryStructure pattern = binary_tree_digraph(d);
            FiniteBinaryStructure host = binary_tree_digraph(depth_host);

            // independently derived expectation: BFS-truncated subtrees
            std::set<std::vector<int>> expected;
            int internal_levels = depth_host - d;
            for (int v = 0; v < host.size(); ++v) {
                int depth_of_v = 0;
                for (int w = v; w > 0; w = (w - 1) / 2)
                    ++depth_of_v;
                if (depth_of_v > internal_levels)
                    continue;
                std::vector<int> subtree{v};
                for (std::size_t i = 0; i < subtree.size(); ++i) {
                    int w = subtree[i];
                    int depth_rel = 0;
                    for (int x = w; x != v; x = (x - 1) / 2)
                        ++depth_rel;
                    if (depth_rel < d) {
                        subtree.push_back(2 * w + 1);
                        subtree.push_back(2 * w + 2);
                    }
                }
                std::sort(subtree.begin(), subtree.end());
                expected.insert(subtree);
            }

            CopySet cs = copies(pattern, host);
            std::set<std::vector<int>> got(cs.copies.begin(), cs.copies.end());
            std::size_t want_count = (std::size_t{1} << (depth_host - d + 1)) - 1;
            if (got != expected || got.size() != want_count) {
                ok = false;
                detail = "d=" + std::to_string(d) + " D=" + std::to_string(depth_host) +
                         ": got " + std::to_string(got.size()) + ", expected " +
                         std::to_string(want_count);
            }
        }
    report(3, "tree-digraph copies are the truncated principal subtrees", ok, detail);
}

// 4. the eight embedding-maximal prefixes
void criterion_maximal_prefixes() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (MaximalFamily f : kAllMaximalFamilies)
        for (int n = 1; n <= 7; ++n)
            if (!maximal_prefix_check(f, n)) {
                ok = false;
                detail = std::string("family ") + maximal_family_name(f) +
                         " failed at n=" + std::to_string(n);
            }
    if (is_prefix_hereditary(path_graph(5)) || is_prefix_hereditary(cycle_graph(6)) ||
        is_prefix_hereditary(FiniteBinaryStructure(3, {{0, 1}}))) {
        ok = false;
        detail = "a negative control passed";
    }
    double secs = seconds_since(start);
    report(4, "embedding-maximal prefixes hold for all 8 families (n <= 7)",
           ok && secs < 30.0, detail.empty() ? std::to_string(secs) + "s" : detail);
}

// 5. finite indivisibility <=> proper union-closed avoiders, as specified
void criterion_indivisible_iff_ideal() {
    Rng rng(1005);
    int bad = 0;
    std::string example;
    const int samples = 300;
    for (int it = 0; it < samples; ++it) {
        FiniteBinaryStructure pattern = random_structure(rng, rng.range(1, 3), rng.range(20, 80));
        FiniteBinaryStructure host = random_structure(rng, rng.range(1, 8), rng.range(20, 80));
        bool ind = pattern_indivisible(pattern, host);
        bool ideal = is_ideal_finite(avoider_sets(pattern, host));
        if (ind != ideal) {
            ++bad;
            if (example.empty())
                example = "pattern " + describe_structure(pattern) + ", host " +
                          describe_structure(host) + ": indivisible=" +
                          (ind ? "true" : "false") + ", ideal=" + (ideal ? "true" : "false");
        }
    }
    report(5, "finite indivisibility <=> avoider ideal (300 samples)", bad == 0,
           std::to_string(bad) + " counterexamples; first: " + example);
}

// 6. coloring machinery and the R(3,3)=6 witness
void criterion_ramsey() {
    Rng rng(1006);
    bool ok = true;
    std::string detail;

    for (int it = 0; it < 120 && ok; ++it) {
        int n = rng.range(2, 8);
        FiniteBinaryStructure raw = random_structure(rng, n, rng.range(10, 80));
        std::vector<Pair> loopless;
        for (const Pair& p : raw.pairs())
            if (p.first != p.second)
                loopless.push_back(p);
        FiniteBinaryStructure s(n, loopless);
        RamseyColoring col = ramsey_coloring(s);

        for (int y = 0; y < n && ok; ++y)
            for (int x = 0; x < y && ok; ++x) {
                bool up = s.related(x, y), down = s.related(y, x);
                int matching = 0;
                matching += (col.color(x, y) == RamseyColor::K0) == (!up && !down);
                matching += (col.color(x, y) == RamseyColor::K1) == (up && down);
                matching += (col.color(x, y) == RamseyColor::K2) == (up && !down);
                matching += (col.color(x, y) == RamseyColor::K3) == (!up && down);
                if (matching != 4) {
                    ok = false;
                    detail = "pair classes do not partition";
                }
            }

        int k = rng.range(2, 4);
        auto fast = homogeneous_subset(col, k);

        // exhaustive reference
        bool exists = false;
        std::vector<int> subset;
        std::function<void(int)> rec = [&](int next) {
            if (exists)
                return;
            if (static_cast<int>(subset.size()) == k) {
                RamseyColor c0 = col.color(subset[0], subset[1]);
                for (std::size_t i = 0; i < subset.size(); ++i)
                    for (std::size_t j = i + 1; j < subset.size(); ++j)
                        if (col.color(subset[i], subset[j]) != c0)
                            return;
                exists = true;
                return;
            }
            for (int v = next; v < n; ++v) {
                subset.push_back(v);
                rec(v + 1);
                subset.pop_back();
            }
        };
        rec(0);
        if (fast.has_value() != exists) {
            ok = false;
            detail = "homogeneous search disagrees with exhaustion";
        }
    }

    if (ok && homogeneous_subset(ramsey_coloring(cycle_graph(5)), 3).has_value()) {
        ok = false;
        detail = "the pentagon witness has a monochromatic triangle";
    }

    if (ok) {
        RamseyColoring six;
        six.domain_size = 6;
        six.colors.resize(15);
        for (std::uint32_t mask = 0; mask < (1u << 15) && ok; ++mask) {
            for (std::size_t i = 0; i < 15; ++i)
                six.colors[i] = (mask >> i & 1u) ? RamseyColor::K1 : RamseyColor::K0;
            if (!homogeneous_subset(six, 3)) {
                ok = false;
                detail = "a 2-coloring on 6 points avoided monochromatic triangles";
            }
        }
    }

    report(6, "pair-coloring partition, homogeneous search, R(3,3)=6 witness", ok, detail);
}

// 7. complement duality
void criterion_complement_duality() {
    Rng rng(1007);
    int bad = 0;
    const int samples = 500;
    for (int it = 0; it < samples; ++it) {
        FiniteBinaryStructure s = random_structure(rng, rng.range(1, 5), rng.range(0, 100));
        if (!is_connected(s) && !is_connected(complement(s)))
            ++bad;
        FiniteBinaryStructure pattern = random_structure(rng, rng.range(1, 5), rng.range(0, 100));
        if (!embeddings_complement_check(pattern, s))
            ++bad;
        if (!embeddings_complement_check(s, s))
            ++bad;
    }
    report(7, "complement duality on 500 sampled structures (size <= 5)", bad == 0,
           std::to_string(bad) + " violations");
}

// 8. the golden classification table
void criterion_classifier_golden() {
    auto start = std::chrono::steady_clock::now();
    struct Row {
        const char* descriptor;
        const char* cell;
        const char* term;  // nullptr = cell-only
    };
    const Row rows[] = {
        {"ordinal: w", "D5", "(P(w)/Fin)+"},
        {"ordinal: w+w", "D3", "((P(w)/Fin)+)^2"},
        {"ordinal: w^2", "D4", "(rp^1(P(w)/Fin))+"},
        {"linear: Q", "C4", "S*pi"},
        {"eqrel: {2:w}", "D3", nullptr},
        {"eqrel: {w:w}", "D4", nullptr},
        {"eqrel: {n:1}", "D4", "(P(Delta)/ED)+"},
        {"eqrel: {w:1}", "D5", nullptr},
        {"eqrel: {1:w}", "D5", nullptr},
        {"example: tree", "B2", "Cohen"},
        {"example: line-graph", "A1", nullptr},
        {"example: ray-graph", "A2", nullptr},
        {"example: tree-cycles", "C3", nullptr},
        {"example: ray-cycles", "A3", nullptr},
        {"example: mixed-B3", "B3", nullptr},
    };
    bool ok = true;
    std::string detail;
    for (const Row& row : rows) {
        Classification c = classify(parse_descriptor(row.descriptor));
        if (c.cell.name() != row.cell) {
            ok = false;
            detail = std::string(row.descriptor) + " -> " + c.cell.name() + ", wanted " +
                     row.cell;
        } else if (row.term && render_term(c.term) != row.term) {
            ok = false;
            detail = std::string(row.descriptor) + " term " + render_term(c.term) +
                     ", wanted " + row.term;
        }
    }
    double secs = seconds_since(start);
    report(8, "classifier golden table (15 descriptors)", ok && secs < 5.0,
           detail.empty() ? std::to_string(secs) + "s" : detail);
}

// 9. normal-form arithmetic against the transfinite-recursion oracle
void criterion_ordinal_oracle() {
    Rng rng(1009);
    test::OrdinalOracle oracle;
    int bad = 0;
    const int samples = 1000;
    for (int it = 0; it < samples; ++it) {
        OrdinalCNF a = random_ordinal(rng, 2, 3, 3);
        OrdinalCNF b = random_ordinal(rng, 2, 3, 3);
        test::Tuple ta = test::to_tuple(a), tb = test::to_tuple(b);
        if (test::from_tuple(oracle.add(ta, tb)) != ord_add(a, b))
            ++bad;
        if (test::from_tuple(oracle.mul(ta, tb)) != ord_mul(a, b))
            ++bad;
    }
    report(9, "ordinal arithmetic agrees with the transfinite oracle (1000 pairs)", bad == 0,
           std::to_string(bad) + " mismatches");
}

} // namespace

int main() {
    criterion_union_oracle();
    criterion_quotient_laws();
    criterion_tree_copies();
    criterion_maximal_prefixes();
    criterion_indivisible_iff_ideal();
    criterion_ramsey();
    criterion_complement_duality();
    criterion_classifier_golden();
    criterion_ordinal_oracle();

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
