#include "copra/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include <json.hpp>

#include "copra/errors.hpp"

namespace copra {

namespace {

// ---------------------------------------------------------------- descriptor parsing

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos)
        return {};
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

SizeParam parse_size_param(const std::string& tok, std::size_t pos) {
    if (tok == "w")
        return SizeParam::omega();
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
            return std::isdigit(c);
        }))
        throw parse_error("expected a positive number or 'w', got '" + tok + "'", pos);
    std::uint64_t v = 0;
    for (char c : tok) {
        if (v > (UINT64_MAX - 9) / 10)
            throw parse_error("size parameter is too large", pos);
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (v == 0)
        throw input_error("size parameters must be positive");
    return SizeParam::nat(v);
}

FamilyDescriptor::Union parse_union(UnionKind kind, const std::string& body, std::size_t base) {
    std::string text = trim(body);
    bool complemented = false;
    const std::string kComplemented = "complemented";
    if (text.size() >= kComplemented.size() &&
        text.compare(text.size() - kComplemented.size(), kComplemented.size(), kComplemented) ==
            0) {
        complemented = true;
        text = trim(text.substr(0, text.size() - kComplemented.size()));
    }
    if (text.empty() || text.front() != '{' || text.back() != '}')
        throw parse_error("union descriptor body must be {size:multiplicity, ...}", base);
    std::string inner = text.substr(1, text.size() - 2);

    FamilyDescriptor::Union u{kind, {}, complemented};
    std::size_t start = 0;
    while (start <= inner.size()) {
        std::size_t comma = inner.find(',', start);
        std::string entry = trim(inner.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start));
        if (entry.empty()) {
            if (comma == std::string::npos)
                break;
            throw parse_error("empty union entry", base + start);
        }
        std::size_t colon = entry.find(':');
        if (colon == std::string::npos)
            throw parse_error("union entry needs size:multiplicity", base + start);
        std::string size_tok = trim(entry.substr(0, colon));
        std::string mult_tok = trim(entry.substr(colon + 1));
        ClassSpec spec;
        if (size_tok == "n" || size_tok == "*") {
            spec.sizes = ClassSpec::Sizes::EveryFinite;
        } else {
            spec.sizes = ClassSpec::Sizes::Fixed;
            spec.class_size = parse_size_param(size_tok, base + start);
        }
        spec.multiplicity = parse_size_param(mult_tok, base + start + colon + 1);
        u.classes.push_back(spec);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (u.classes.empty())
        throw input_error("union descriptor needs at least one class");
    return u;
}

NamedExample parse_example_name(const std::string& name) {
    if (name == "line-graph")
        return NamedExample::LineGraph;
    if (name == "ray-graph")
        return NamedExample::RayGraph;
    if (name == "tree")
        return NamedExample::Tree;
    if (name == "tree-cycles")
        return NamedExample::TreeCycles;
    if (name == "ray-cycles")
        return NamedExample::RayCycles;
    if (name == "mixed-B3")
        return NamedExample::MixedB3;
    throw input_error("unknown named example '" + name + "'");
}

} // namespace

FamilyDescriptor parse_descriptor(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw parse_error("descriptor needs the form 'kind: body'", 0);
    std::string verb = trim(text.substr(0, colon));
    std::string body = text.substr(colon + 1);

    if (verb == "ordinal")
        return {FamilyDescriptor::Ordinal{parse_ordinal(body)}};
    if (verb == "linear") {
        if (trim(body) != "Q")
            throw input_error("the only supported non-scattered linear order is Q");
        return {FamilyDescriptor::NonScatteredLinear{}};
    }
    if (verb == "eqrel")
        return {parse_union(UnionKind::EquivalenceRelation, body, colon + 1)};
    if (verb == "graphs")
        return {parse_union(UnionKind::CompleteGraphs, body, colon + 1)};
    if (verb == "chains")
        return {parse_union(UnionKind::Chains, body, colon + 1)};
    if (verb == "maximal") {
        auto family = maximal_family_from_name(trim(body));
        if (!family)
            throw input_error("unknown maximal family '" + trim(body) + "'");
        return {FamilyDescriptor::Maximal{*family}};
    }
    if (verb == "example")
        return {FamilyDescriptor::Example{parse_example_name(trim(body))}};
    throw parse_error("unknown descriptor kind '" + verb + "'", 0);
}

// ---------------------------------------------------------------- diagram cells

bool cell_is_populated(const DiagramCell& cell) {
    static const DiagramCell populated[] = {
        {'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3},
        {'C', 3}, {'C', 4}, {'D', 3}, {'D', 4}, {'D', 5},
    };
    return std::find(std::begin(populated), std::end(populated), cell) != std::end(populated);
}

const char* to_string(CopiesCardinality v) {
    switch (v) {
        case CopiesCardinality::One: return "1";
        case CopiesCardinality::Aleph0: return "aleph0";
        case CopiesCardinality::Continuum: return "c";
    }
    return "?";
}

const char* to_string(IdealStatus v) {
    switch (v) {
        case IdealStatus::NotIdeal: return "not-ideal";
        case IdealStatus::TallIdeal: return "tall-ideal";
        case IdealStatus::Fin: return "fin";
    }
    return "?";
}

const char* to_string(CopiesDensity v) {
    return v == CopiesDensity::NowhereDense ? "nowhere-dense" : "dense";
}

const char* to_string(SqSize v) {
    switch (v) {
        case SqSize::One: return "1";
        case SqSize::Aleph0: return "aleph0";
        case SqSize::AboveAleph0: return ">aleph0";
    }
    return "?";
}

const char* to_string(SqKind v) {
    switch (v) {
        case SqKind::Trivial: return "trivial";
        case SqKind::Cohen: return "cohen";
        case SqKind::SigmaClosedAtomless: return "sigma-closed-atomless";
        case SqKind::QuotientOverCoanalyticTallIdeal: return "coanalytic-quotient";
    }
    return "?";
}

CellAttributes cell_attributes(const DiagramCell& cell) {
    if (!cell_is_populated(cell))
        throw input_error("cell " + cell.name() + " is empty in the classification diagram");
    CellAttributes a{};
    switch (cell.row) {
        case 1:
            a.copies_cardinality = CopiesCardinality::One;
            a.divisible = true;
            a.ideal_status = IdealStatus::NotIdeal;
            a.copies_density = CopiesDensity::NowhereDense;
            break;
        case 2:
            a.copies_cardinality = CopiesCardinality::Aleph0;
            a.divisible = true;
            a.ideal_status = IdealStatus::NotIdeal;
            a.copies_density = CopiesDensity::NowhereDense;
            break;
        case 3:
            a.copies_cardinality = CopiesCardinality::Continuum;
            a.divisible = true;
            a.ideal_status = IdealStatus::NotIdeal;
            a.copies_density = CopiesDensity::NowhereDense;
            break;
        case 4:
            a.copies_cardinality = CopiesCardinality::Continuum;
            a.divisible = false;
            a.ideal_status = IdealStatus::TallIdeal;
            a.copies_density = CopiesDensity::NowhereDense;
            break;
        default:
            a.copies_cardinality = CopiesCardinality::Continuum;
            a.divisible = false;
            a.ideal_status = IdealStatus::Fin;
            a.copies_density = CopiesDensity::Dense;
            break;
    }
    switch (cell.column) {
        case 'A':
            a.sq_size = SqSize::One;
            a.sq_kind = SqKind::Trivial;
            break;
        case 'B':
            a.sq_size = SqSize::Aleph0;
            a.sq_kind = SqKind::Cohen;
            break;
        case 'C':
            a.sq_size = SqSize::AboveAleph0;
            a.sq_kind = SqKind::QuotientOverCoanalyticTallIdeal;
            break;
        default:
            a.sq_size = SqSize::AboveAleph0;
            a.sq_kind = SqKind::SigmaClosedAtomless;
            break;
    }
    return a;
}

// ---------------------------------------------------------------- classification

namespace {

SizeParam add_params(SizeParam a, SizeParam b) {
    if (a.is_omega || b.is_omega)
        return SizeParam::omega();
    return SizeParam::nat(a.n + b.n);
}

struct UnionProfile {
    bool every_finite = false;                    // one class of each finite size occurs
    std::map<std::uint64_t, SizeParam> finite;    // finite size -> multiplicity
    SizeParam mu = SizeParam::nat(0);             // number of classes of size omega
    SizeParam class_count = SizeParam::nat(0);    // |I|
    bool total_finite = true;
    std::uint64_t total = 0;                      // meaningful when total_finite
};

UnionProfile profile_union(const FamilyDescriptor::Union& u) {
    UnionProfile p;
    for (const ClassSpec& spec : u.classes) {
        p.class_count = add_params(p.class_count, spec.multiplicity);
        if (spec.sizes == ClassSpec::Sizes::EveryFinite) {
            p.every_finite = true;
            p.total_finite = false;
            p.class_count = SizeParam::omega();
        } else if (spec.class_size.is_omega) {
            p.mu = add_params(p.mu, spec.multiplicity);
            p.total_finite = false;
        } else {
            auto [it, inserted] =
                p.finite.try_emplace(spec.class_size.n, spec.multiplicity);
            if (!inserted)
                it->second = add_params(it->second, spec.multiplicity);
            if (spec.multiplicity.is_omega)
                p.total_finite = false;
            else if (p.total_finite)
                p.total += spec.class_size.n * spec.multiplicity.n;
        }
    }
    return p;
}

Classification classify_union(const FamilyDescriptor::Union& u, std::vector<std::string>& cits) {
    UnionProfile p = profile_union(u);

    if (u.complemented)
        cits.push_back("note:union/complement-invariant");

    if (p.total_finite) {
        cits.push_back("rule:finite/A1");
        return {{'A', 1}, cell_attributes({'A', 1}), ForcingTerm::one(), {}};
    }

    const bool n_fin_infinite = p.every_finite;
    const std::uint64_t n_fin_count = p.finite.size();  // meaningful when !every_finite
    const bool mu_infinite = p.mu.is_omega;
    const std::uint64_t mu = p.mu.is_omega ? 0 : p.mu.n;
    const bool single_class = !p.class_count.is_omega && p.class_count.n == 1;
    const bool n_has_omega = mu_infinite || mu > 0;

    // Verbatim indivisibility criterion for these unions.
    const bool n_in_N_omega = n_fin_infinite && !n_has_omega;
    const bool n_is_one = !n_fin_infinite && !n_has_omega && p.finite.size() == 1 &&
                          p.finite.begin()->first == 1;
    const bool indivisible = n_in_N_omega || n_is_one || single_class || mu_infinite;
    cits.push_back("rule:union/indivisibility-criterion");

    // Literal match against the embedding-maximal shapes: all classes of size
    // one (diagonal / empty relation), or a single class of size omega (full
    // relation / complete graph / the omega-chain).
    const bool maximal = n_is_one || (single_class && n_has_omega);

    DiagramCell cell;
    if (maximal) {
        cell = {'D', 5};
        cits.push_back("rule:union/maximal-match/D5");
    } else if (indivisible) {
        cell = {'D', 4};
        cits.push_back("rule:union/indivisible/D4");
    } else {
        cell = {'D', 3};
        cits.push_back("rule:union/divisible/D3");
    }

    ForcingTerm term = ForcingTerm::one();
    const bool n_all_finite_set = !n_fin_infinite && !n_has_omega;
    if (n_all_finite_set || single_class) {
        term = ForcingTerm::pfin();
        cits.push_back("term:union/row1-pfin");
    } else if (mu_infinite) {
        term = ForcingTerm::pfinxfin();
        cits.push_back("term:union/row4-finxfin");
    } else if (n_fin_infinite) {
        std::vector<ForcingTerm> factors{ForcingTerm::pdelta_ed()};
        if (mu > 0)
            factors.push_back(
                ForcingTerm::power(ForcingTerm::pfin(), TermExponent::nat(mu)));
        term = term_normalize(ForcingTerm::product(std::move(factors)));
        cits.push_back("term:union/row3-delta-ed");
    } else {
        std::uint64_t n = n_fin_count + mu;
        term = term_normalize(ForcingTerm::power(ForcingTerm::pfin(), TermExponent::nat(n)));
        cits.push_back("term:union/row2-pfin-power");
        cits.push_back("note:union/exponent=|Nfin|+mu");
    }

    return {cell, cell_attributes(cell), std::move(term), {}};
}

Classification classify_ordinal(const OrdinalCNF& a, std::vector<std::string>& cits) {
    if (a.is_zero())
        throw input_error("the empty ordinal denotes no structure");
    if (a.is_finite()) {
        cits.push_back("rule:finite/A1");
        return {{'A', 1}, cell_attributes({'A', 1}), ForcingTerm::one(), {}};
    }
    DiagramCell cell;
    if (a == OrdinalCNF::omega()) {
        cell = {'D', 5};
        cits.push_back("rule:ordinal/omega/D5");
    } else if (is_indivisible_ordinal(a)) {
        cell = {'D', 4};
        cits.push_back("rule:ordinal/omega-power/D4");
    } else {
        cell = {'D', 3};
        cits.push_back("rule:ordinal/scattered/D3");
    }
    cits.push_back("formula:ordinal-quotient-product");
    return {cell, cell_attributes(cell), sq_formula(a), {}};
}

Classification classify_example(NamedExample e, std::vector<std::string>& cits) {
    DiagramCell cell;
    ForcingTerm term = ForcingTerm::one();
    const char* tag = "";
    switch (e) {
        case NamedExample::LineGraph:
            cell = {'A', 1};
            term = ForcingTerm::one();
            tag = "rule:example/line-graph/A1";
            break;
        case NamedExample::RayGraph:
            cell = {'A', 2};
            term = ForcingTerm::one();
            tag = "rule:example/ray-graph/A2";
            break;
        case NamedExample::Tree:
            cell = {'B', 2};
            term = ForcingTerm::cohen();
            tag = "rule:example/tree/B2";
            break;
        case NamedExample::TreeCycles:
            cell = {'C', 3};
            term = ForcingTerm::power(ForcingTerm::cohen(), TermExponent::omega());
            tag = "rule:example/tree-cycles/C3";
            break;
        case NamedExample::RayCycles:
            cell = {'A', 3};
            term = ForcingTerm::one();
            tag = "rule:example/ray-cycles/A3";
            break;
        case NamedExample::MixedB3:
            cell = {'B', 3};
            term = ForcingTerm::cohen();
            tag = "rule:example/mixed-B3/B3";
            break;
    }
    cits.push_back(tag);
    return {cell, cell_attributes(cell), std::move(term), {}};
}

} // namespace

Classification classify(const FamilyDescriptor& descriptor, bool ch_mode) {
    std::vector<std::string> cits;
    Classification result = std::visit(
        [&](const auto& d) -> Classification {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FamilyDescriptor::Ordinal>) {
                return classify_ordinal(d.value, cits);
            } else if constexpr (std::is_same_v<T, FamilyDescriptor::NonScatteredLinear>) {
                cits.push_back("rule:linear/non-scattered/C4");
                cits.push_back("note:ch-second-iterand-pfin");
                return {{'C', 4}, cell_attributes({'C', 4}), ForcingTerm::sacks_iter(), {}};
            } else if constexpr (std::is_same_v<T, FamilyDescriptor::Union>) {
                return classify_union(d, cits);
            } else if constexpr (std::is_same_v<T, FamilyDescriptor::Maximal>) {
                cits.push_back("rule:maximal/D5");
                return {{'D', 5}, cell_attributes({'D', 5}), ForcingTerm::pfin(), {}};
            } else {
                return classify_example(d.which, cits);
            }
        },
        descriptor.value);

    if (result.cell.row == 3)
        cits.push_back("caveat:row3-copy-cardinality-from-diagram");

    if (ch_mode && is_sigma_closed_atomless_continuum(result.term) &&
        !(result.term == ForcingTerm::pfin())) {
        result.term = ForcingTerm::pfin();
        cits.push_back("rewrite:ch-collapse-to-pfin");
    }

    result.citations = std::move(cits);
    return result;
}

std::string classification_to_json_string(const Classification& c) {
    nlohmann::json j;
    j["cell"] = c.cell.name();
    j["attributes"] = {
        {"copies", to_string(c.attributes.copies_cardinality)},
        {"divisible", c.attributes.divisible},
        {"ideal", to_string(c.attributes.ideal_status)},
        {"density", to_string(c.attributes.copies_density)},
        {"sq-size", to_string(c.attributes.sq_size)},
        {"sq-kind", to_string(c.attributes.sq_kind)},
    };
    j["term"] = render_term(c.term);
    j["citations"] = c.citations;
    return j.dump();
}

} // namespace copra
