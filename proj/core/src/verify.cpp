#include "copra/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "copra/classifier.hpp"
#include "copra/copy_analysis.hpp"
#include "copra/errors.hpp"
#include "copra/generate.hpp"
#include "copra/ordinal.hpp"
#include "copra/poset.hpp"

namespace copra {

namespace {

struct Checker {
    SuiteResult result;

    void check(bool ok, const std::string& what) {
        if (ok) {
            ++result.passed;
        } else {
            ++result.failed;
            if (result.failures.size() < 5)
                result.failures.push_back(what);
        }
    }
};

// ------------------------------------------------------------------ closures

// All partitions of 0..n-1, as block indices per element.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> block(n, 0);
    std::function<void(int, int)> rec = [&](int i, int max_used) {
        if (i == n) {
            fn(block);
            return;
        }
        for (int b = 0; b <= max_used + 1; ++b) {
            block[i] = b;
            rec(i + 1, std::max(max_used, b));
        }
    };
    if (n > 0)
        rec(0, -1);
}

void suite_closures(Checker& c, const SuiteOptions& opt) {
    Rng rng(opt.seed * 2 + 1);
    const int samples = 120 * opt.scale;
    for (int it = 0; it < samples; ++it) {
        int n = rng.range(1, 6);
        FiniteBinaryStructure s = random_structure(rng, n, rng.range(5, 70));

        auto rs = rs_closure(s);
        std::set<Pair> rs_set(rs.begin(), rs.end());
        bool reflexive = true, symmetric = true, contains = true;
        for (int v = 0; v < n; ++v)
            reflexive = reflexive && rs_set.count({v, v});
        for (const Pair& p : rs)
            symmetric = symmetric && rs_set.count({p.second, p.first});
        for (const Pair& p : s.pairs())
            contains = contains && rs_set.count(p);
        c.check(reflexive && symmetric && contains,
                "rs closure must be reflexive, symmetric and contain the relation");

        Partition comp = components(s);
        bool blocks_connected = true;
        std::size_t pair_total = 0;
        for (const auto& b : comp.blocks) {
            FiniteBinaryStructure sub = induced(s, b);
            pair_total += sub.pairs().size();
            if (b.size() > 0 && !is_connected(sub))
                blocks_connected = false;
        }
        c.check(blocks_connected, "component blocks must induce connected structures");
        c.check(pair_total == s.pairs().size(),
                "component blocks must carry every pair (no cross-block pairs)");

        // Least equivalence relation containing the relation: every
        // partition whose equivalence contains the relation is refined by it.
        bool minimal = true;
        for_each_partition(n, [&](const std::vector<int>& block) {
            bool contains_rel = true;
            for (const Pair& p : s.pairs())
                if (block[p.first] != block[p.second])
                    contains_rel = false;
            if (!contains_rel)
                return;
            for (const auto& b : comp.blocks)
                for (int v : b)
                    if (block[v] != block[b.front()])
                        minimal = false;
        });
        c.check(minimal, "components must refine every equivalence containing the relation");

        c.check(is_connected(s) || is_connected(complement(s)),
                "a structure or its complement must be connected");
    }
}

// ---------------------------------------------------------------- embeddings

void suite_embeddings(Checker& c, const SuiteOptions& opt) {
    Rng rng(opt.seed * 2 + 2);
    const int samples = 120 * opt.scale;
    for (int it = 0; it < samples; ++it) {
        int ps = rng.range(1, 4);
        int hs = rng.range(ps, 6);
        FiniteBinaryStructure pattern = random_structure(rng, ps, rng.range(5, 80));
        FiniteBinaryStructure host = random_structure(rng, hs, rng.range(5, 80));

        auto fast = embeddings(pattern, host, opt.limits);
        auto naive = naive_embeddings(pattern, host);
        c.check(fast == naive, "search must agree with the naive injection check");

        Partition pattern_comp = components(pattern);
        Partition host_comp = components(host);
        bool coherent = true, component_preserving = true;
        for (const Embedding& f : fast) {
            std::vector<int> image = f;
            std::sort(image.begin(), image.end());
            if (!are_isomorphic(induced(host, image), pattern))
                coherent = false;
            for (int x = 0; x < pattern.size(); ++x)
                for (int y = 0; y < pattern.size(); ++y)
                    if (pattern_comp.block_of[x] == pattern_comp.block_of[y] &&
                        host_comp.block_of[f[x]] != host_comp.block_of[f[y]])
                        component_preserving = false;
        }
        c.check(coherent, "every embedding image must induce a copy of the pattern");
        c.check(component_preserving, "embeddings must map components into components");

        c.check(embeddings_complement_check(pattern, host, opt.limits),
                "embeddings must be invariant under simultaneous complementation");
    }
}

// --------------------------------------------------------------- union oracle

void suite_union_oracle(Checker& c, const SuiteOptions& opt) {
    Rng rng(opt.seed * 2 + 3);
    const int samples = 50 * opt.scale;
    for (int it = 0; it < samples; ++it) {
        int k = rng.range(2, 3);
        std::vector<FiniteBinaryStructure> parts, host_parts;
        for (int i = 0; i < k; ++i)
            parts.push_back(random_connected_structure(rng, rng.range(1, 3), rng.range(10, 60)));
        int m = rng.range(2, 3);
        for (int j = 0; j < m; ++j)
            host_parts.push_back(
                random_connected_structure(rng, rng.range(1, 4), rng.range(10, 60)));

        CopySet oracle = copies_of_union_oracle(parts, host_parts, opt.limits);
        CopySet direct = copies(disjoint_union(parts).structure,
                                disjoint_union(host_parts).structure, opt.limits);
        c.check(oracle.copies == direct.copies,
                "component-wise copies must equal the direct enumeration");
    }
}

// ------------------------------------------------------------------ quotients

void suite_quotients(Checker& c, const SuiteOptions& opt) {
    Rng rng(opt.seed * 2 + 4);
    const int samples = 150 * opt.scale;
    for (int it = 0; it < samples; ++it) {
        int n = rng.range(1, 8);
        FinitePoset p = random_poset(rng, n, rng.range(10, 70));

        bool extends = true, transitive = true;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (p.leq(a, b) && !sep_leq(p, a, b))
                    extends = false;
                for (int d = 0; d < n; ++d)
                    if (sep_leq(p, a, b) && sep_leq(p, b, d) && !sep_leq(p, a, d))
                        transitive = false;
            }
        c.check(extends, "the separative relation must extend the order");
        c.check(transitive, "the separative relation must be transitive");

        bool compat = true;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (sep_leq(p, a, b) && !compatible(p, a, b))
                    compat = false;
        c.check(compat, "separatively comparable elements must be compatible");

        SeparativeQuotient sq = separative_quotient(p);
        c.check(is_separative(sq.quotient), "the separative quotient must be separative");
        c.check(is_atomic(sq.quotient), "atomicity must transfer to the quotient");

        bool directed = true;
        for (int a = 0; a < n && directed; ++a)
            for (int b = 0; b < n && directed; ++b)
                directed = compatible(p, a, b);
        c.check((sq.quotient.size() == 1) == directed,
                "the quotient is trivial exactly for downwards directed orders");

        FinitePoset q = random_relabel(rng, p);
        SeparativeQuotient sq2 = separative_quotient(q);
        c.check(are_poset_isomorphic(sq.quotient, sq2.quotient, 16),
                "isomorphic orders must have isomorphic quotients");

        c.check(is_atomic(p), "finite nonempty orders are atomic");
    }
}

// ------------------------------------------------------------------- products

void suite_products(Checker& c, const SuiteOptions& opt) {
    Rng rng(opt.seed * 2 + 5);
    const int samples = 60 * opt.scale;
    const FinitePoset singleton(1, std::vector<Pair>{{0, 0}});
    for (int it = 0; it < samples; ++it) {
        int np = rng.range(1, 5);
        int nq = rng.range(1, 5);
        FinitePoset p = random_poset(rng, np, rng.range(10, 70));
        FinitePoset q = random_poset(rng, nq, rng.range(10, 70));

        c.check(are_poset_isomorphic(product(p, singleton), p, 8),
                "the one-point order must be a product identity");

        FinitePoset pq = product(p, q);
        SeparativeQuotient sq_pq = separative_quotient(pq);
        FinitePoset rhs = product(separative_quotient(p).quotient,
                                  separative_quotient(q).quotient);
        c.check(are_poset_isomorphic(sq_pq.quotient, rhs, 32),
                "the quotient of a product must be the product of the quotients");
    }
}

// -------------------------------------------------------------------- maximal

void suite_maximal(Checker& c, const SuiteOptions&) {
    for (MaximalFamily f : kAllMaximalFamilies)
        for (int n = 1; n <= 7; ++n)
            c.check(maximal_prefix_check(f, n),
                    std::string("prefix check must hold for family ") +
                        maximal_family_name(f) + " at n=" + std::to_string(n));
    c.check(!is_prefix_hereditary(path_graph(5)), "the 5-path is not prefix-hereditary");
    c.check(!is_prefix_hereditary(cycle_graph(6)), "the 6-cycle is not prefix-hereditary");
    c.check(!is_prefix_hereditary(FiniteBinaryStructure(3, {{0, 1}})),
            "an arc plus an isolated vertex is not prefix-hereditary");
}

// --------------------------------------------------------------------- ramsey

std::optional<std::vector<int>> exhaustive_homogeneous(const RamseyColoring& col, int k) {
    std::vector<int> subset;
    std::function<std::optional<std::vector<int>>(int)> rec =
        [&](int next) -> std::optional<std::vector<int>> {
        if (static_cast<int>(subset.size()) == k) {
            RamseyColor c0 = col.color(subset[0], subset[1]);
            for (std::size_t i = 0; i < subset.size(); ++i)
                for (std::size_t j = i + 1; j < subset.size(); ++j)
                    if (col.color(subset[i], subset[j]) != c0)
                        return std::nullopt;
            return subset;
        }
        for (int v = next; v < col.domain_size; ++v) {
            subset.push_back(v);
            if (auto found = rec(v + 1))
                return found;
            subset.pop_back();
        }
        return std::nullopt;
    };
    return rec(0);
}

void suite_ramsey(Checker& c, const SuiteOptions& opt) {
    Rng rng(opt.seed * 2 + 6);
    for (int it = 0; it < 60 * opt.scale; ++it) {
        int n = rng.range(2, 8);
        FiniteBinaryStructure raw = random_structure(rng, n, rng.range(10, 80));
        std::vector<Pair> loopless;
        for (const Pair& p : raw.pairs())
            if (p.first != p.second)
                loopless.push_back(p);
        FiniteBinaryStructure s(n, loopless);

        RamseyColoring col = ramsey_coloring(s);
        bool classes_ok = true;
        for (int y = 0; y < n && classes_ok; ++y)
            for (int x = 0; x < y && classes_ok; ++x) {
                bool up = s.related(x, y), down = s.related(y, x);
                RamseyColor expected = !up && !down ? RamseyColor::K0
                                     : up && down   ? RamseyColor::K1
                                     : up           ? RamseyColor::K2
                                                    : RamseyColor::K3;
                classes_ok = col.color(x, y) == expected;
            }
        c.check(classes_ok, "every pair must fall in exactly its defining class");

        int k = rng.range(2, 4);
        auto found = homogeneous_subset(col, k);
        auto reference = exhaustive_homogeneous(col, k);
        c.check(found.has_value() == reference.has_value(),
                "homogeneous-set search must agree with exhaustive search");
        if (found) {
            bool mono = true;
            for (std::size_t i = 0; i < found->elements.size(); ++i)
                for (std::size_t j = i + 1; j < found->elements.size(); ++j)
                    if (col.color(found->elements[i], found->elements[j]) != found->color)
                        mono = false;
            c.check(mono, "the returned set must be monochromatic in the returned color");
        }
    }

    // Pentagon edges vs. pentagram non-edges: no monochromatic triangle on 5.
    std::vector<Pair> pentagon;
    for (int i = 0; i < 5; ++i) {
        pentagon.emplace_back(i, (i + 1) % 5);
        pentagon.emplace_back((i + 1) % 5, i);
    }
    RamseyColoring penta = ramsey_coloring(FiniteBinaryStructure(5, pentagon));
    c.check(!homogeneous_subset(penta, 3).has_value(),
            "the pentagon 2-coloring has no monochromatic triangle");

    // Every 2-coloring of the 15 pairs on 6 points has one.
    bool all_have = true;
    RamseyColoring six;
    six.domain_size = 6;
    six.colors.resize(15);
    for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
        for (std::size_t i = 0; i < 15; ++i)
            six.colors[i] = (mask >> i & 1u) ? RamseyColor::K1 : RamseyColor::K0;
        if (!homogeneous_subset(six, 3))
            all_have = false;
    }
    c.check(all_have, "every 2-coloring on six points has a monochromatic triangle");
}

// ------------------------------------------------------------------- ordinals

void suite_ordinals(Checker& c, const SuiteOptions& opt) {
    Rng rng(opt.seed * 2 + 7);
    const int samples = 300 * opt.scale;
    for (int it = 0; it < samples; ++it) {
        OrdinalCNF a = random_ordinal(rng, 3, 3, 4);
        OrdinalCNF b = random_ordinal(rng, 3, 3, 4);
        OrdinalCNF d = random_ordinal(rng, 3, 3, 4);

        auto valid = [](const OrdinalCNF& x) {
            try {
                OrdinalCNF::from_terms(x.terms());
                return true;
            } catch (const error&) {
                return false;
            }
        };
        c.check(valid(ord_add(a, b)) && valid(ord_mul(a, b)),
                "arithmetic must preserve the normal form");

        c.check(ord_add(ord_add(a, b), d) == ord_add(a, ord_add(b, d)),
                "addition must be associative");
        c.check(ord_mul(ord_mul(a, b), d) == ord_mul(a, ord_mul(b, d)),
                "multiplication must be associative");
        c.check(ord_mul(a, ord_add(b, d)) == ord_add(ord_mul(a, b), ord_mul(a, d)),
                "multiplication must distribute over addition from the left");

        c.check(parse_ordinal(render_ordinal(a)) == a, "render then parse must round-trip");

        if (!a.is_zero()) {
            ExponentSplit split = exponent_split(a);
            c.check(ord_add(split.gamma, OrdinalCNF::natural(split.r)) == a,
                    "the split parts must add back to the exponent");
            c.check(split.gamma == OrdinalCNF::natural(1) || split.gamma.is_limit(),
                    "the split head must be 1 or a limit");

            // Additive absorption characterizes the omega-powers (beyond 1).
            bool absorbs = ord_compare(a, OrdinalCNF::omega()) != std::strong_ordering::less;
            for (int probe = 0; probe < 8 && absorbs; ++probe) {
                OrdinalCNF xi = random_ordinal(rng, 3, 3, 4);
                if (ord_compare(xi, a) == std::strong_ordering::less &&
                    ord_add(xi, a) != a)
                    absorbs = false;
            }
            c.check(is_indivisible_ordinal(a) ==
                        (a.terms().size() == 1 && a.terms()[0].coeff() == 1 &&
                         !a.terms()[0].exponent().is_zero()),
                    "indivisibility must match its normal-form reading");
            if (is_indivisible_ordinal(a))
                c.check(absorbs, "an omega-power must absorb every smaller left summand");
        }
    }
}

// ----------------------------------------------------------- classifier-golden

void suite_classifier_golden(Checker& c, const SuiteOptions&) {
    const std::pair<const char*, const char*> cells[] = {
        {"ordinal: w", "D5"},
        {"ordinal: w+w", "D3"},
        {"ordinal: w^2", "D4"},
        {"linear: Q", "C4"},
        {"eqrel: {2:w}", "D3"},
        {"eqrel: {w:w}", "D4"},
        {"eqrel: {n:1}", "D4"},
        {"eqrel: {w:1}", "D5"},
        {"eqrel: {1:w}", "D5"},
        {"example: tree", "B2"},
        {"example: line-graph", "A1"},
        {"example: ray-graph", "A2"},
        {"example: tree-cycles", "C3"},
        {"example: ray-cycles", "A3"},
        {"example: mixed-B3", "B3"},
    };
    for (const auto& [descriptor, cell] : cells) {
        Classification got = classify(parse_descriptor(descriptor));
        c.check(got.cell.name() == cell, std::string(descriptor) + " must land in " + cell +
                                             ", got " + got.cell.name());
        c.check(got.attributes == cell_attributes(got.cell),
                std::string(descriptor) + " attributes must match its cell");
    }

    const std::pair<const char*, const char*> terms[] = {
        {"ordinal: w", "(P(w)/Fin)+"},
        {"ordinal: w+w", "((P(w)/Fin)+)^2"},
        {"ordinal: w^2", "(rp^1(P(w)/Fin))+"},
        {"linear: Q", "S*pi"},
        {"eqrel: {n:1}", "(P(Delta)/ED)+"},
        {"eqrel: {w:w}", "(P(wxw)/(FinxFin))+"},
        {"example: tree", "Cohen"},
    };
    for (const auto& [descriptor, term] : terms) {
        Classification got = classify(parse_descriptor(descriptor));
        c.check(render_term(got.term) == term, std::string(descriptor) + " must map to " +
                                                   term + ", got " + render_term(got.term));
    }

    // CH mode may only rewrite the term, never the cell.
    const char* descriptors[] = {"ordinal: w+w", "eqrel: {w:w}", "linear: Q",
                                 "example: tree", "maximal: diag"};
    for (const char* d : descriptors) {
        Classification plain = classify(parse_descriptor(d), false);
        Classification ch = classify(parse_descriptor(d), true);
        c.check(plain.cell == ch.cell && plain.attributes == ch.attributes,
                std::string(d) + ": CH mode must not move the cell");
    }
    c.check(render_term(classify(parse_descriptor("ordinal: w+w"), true).term) ==
                "(P(w)/Fin)+",
            "CH mode must collapse the square of (P(w)/Fin)+");
    c.check(render_term(classify(parse_descriptor("linear: Q"), true).term) == "S*pi",
            "CH mode must leave the Sacks iteration alone");
}

} // namespace

std::vector<Embedding> naive_embeddings(const FiniteBinaryStructure& pattern,
                                        const FiniteBinaryStructure& host) {
    std::vector<Embedding> out;
    std::vector<int> map(pattern.size(), -1);
    std::vector<char> used(host.size(), 0);
    std::function<void(int)> rec = [&](int x) {
        if (x == pattern.size()) {
            for (int a = 0; a < pattern.size(); ++a)
                for (int b = 0; b < pattern.size(); ++b)
                    if (pattern.related(a, b) != host.related(map[a], map[b]))
                        return;
            out.push_back(map);
            return;
        }
        for (int v = 0; v < host.size(); ++v) {
            if (used[v])
                continue;
            map[x] = v;
            used[v] = 1;
            rec(x + 1);
            used[v] = 0;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<std::string>& verification_suite_names() {
    static const std::vector<std::string> names = {
        "closures",  "embeddings", "union-oracle", "quotients",        "products",
        "maximal",   "ramsey",     "ordinals",     "classifier-golden",
    };
    return names;
}

SuiteResult run_verification_suite(const std::string& name, const SuiteOptions& options) {
    Checker c;
    c.result.name = name;
    if (name == "closures")
        suite_closures(c, options);
    else if (name == "embeddings")
        suite_embeddings(c, options);
    else if (name == "union-oracle")
        suite_union_oracle(c, options);
    else if (name == "quotients")
        suite_quotients(c, options);
    else if (name == "products")
        suite_products(c, options);
    else if (name == "maximal")
        suite_maximal(c, options);
    else if (name == "ramsey")
        suite_ramsey(c, options);
    else if (name == "ordinals")
        suite_ordinals(c, options);
    else if (name == "classifier-golden")
        suite_classifier_golden(c, options);
    else
        throw input_error("unknown verification suite '" + name + "'");
    return c.result;
}

} // namespace copra
