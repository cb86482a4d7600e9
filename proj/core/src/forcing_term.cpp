#include "copra/forcing_term.hpp"

#include <algorithm>

#include "copra/errors.hpp"

namespace copra {

struct ForcingTerm::Node {
    Kind kind = Kind::One;
    OrdinalCNF gamma;                  // QuotientBase
    std::string name;                  // QuotientIdeal
    std::uint64_t iterations = 0;      // ReducedPower
    TermExponent exp;                  // Power
    std::vector<ForcingTerm> children; // base for ReducedPower/Power, factors for Product
};

ForcingTerm ForcingTerm::leaf(Kind kind) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    return ForcingTerm(std::move(node));
}

ForcingTerm ForcingTerm::one() { return leaf(Kind::One); }
ForcingTerm ForcingTerm::cohen() { return leaf(Kind::Cohen); }
ForcingTerm ForcingTerm::pfin() { return leaf(Kind::PFin); }
ForcingTerm ForcingTerm::pdelta_ed() { return leaf(Kind::PDeltaED); }
ForcingTerm ForcingTerm::pfinxfin() { return leaf(Kind::PFinxFin); }
ForcingTerm ForcingTerm::sacks_iter() { return leaf(Kind::SacksIter); }

ForcingTerm ForcingTerm::quotient_base(OrdinalCNF gamma) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::QuotientBase;
    node->gamma = std::move(gamma);
    return ForcingTerm(std::move(node));
}

ForcingTerm ForcingTerm::quotient_ideal(std::string name) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::QuotientIdeal;
    node->name = std::move(name);
    return ForcingTerm(std::move(node));
}

ForcingTerm ForcingTerm::reduced_power(std::uint64_t iterations, ForcingTerm base) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::ReducedPower;
    node->iterations = iterations;
    node->children.push_back(std::move(base));
    return ForcingTerm(std::move(node));
}

ForcingTerm ForcingTerm::product(std::vector<ForcingTerm> factors) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Product;
    node->children = std::move(factors);
    return ForcingTerm(std::move(node));
}

ForcingTerm ForcingTerm::power(ForcingTerm base, TermExponent exponent) {
    if (exponent.kind == TermExponent::Kind::Nat && exponent.n == 0)
        throw input_error("symbolic power exponents must be positive");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Power;
    node->exp = exponent;
    node->children.push_back(std::move(base));
    return ForcingTerm(std::move(node));
}

ForcingTerm::Kind ForcingTerm::kind() const { return node_->kind; }
const OrdinalCNF& ForcingTerm::gamma() const { return node_->gamma; }
const std::string& ForcingTerm::ideal_name() const { return node_->name; }
std::uint64_t ForcingTerm::rp_iterations() const { return node_->iterations; }
const ForcingTerm& ForcingTerm::base() const { return node_->children.front(); }
const std::vector<ForcingTerm>& ForcingTerm::factors() const { return node_->children; }
const TermExponent& ForcingTerm::exponent() const { return node_->exp; }

bool ForcingTerm::operator==(const ForcingTerm& other) const {
    if (node_ == other.node_)
        return true;
    if (node_->kind != other.node_->kind)
        return false;
    switch (node_->kind) {
        case Kind::QuotientBase:
            return node_->gamma == other.node_->gamma;
        case Kind::QuotientIdeal:
            return node_->name == other.node_->name;
        case Kind::ReducedPower:
            return node_->iterations == other.node_->iterations &&
                   base() == other.base();
        case Kind::Power:
            return node_->exp == other.node_->exp && base() == other.base();
        case Kind::Product:
            return node_->children == other.node_->children;
        default:
            return true;
    }
}

namespace {

using Kind = ForcingTerm::Kind;

// Splits a factor into (base, natural multiplicity); non-natural powers stay opaque.
std::pair<ForcingTerm, std::uint64_t> factor_multiplicity(const ForcingTerm& f) {
    if (f.kind() == Kind::Power && f.exponent().kind == TermExponent::Kind::Nat)
        return {f.base(), f.exponent().n};
    return {f, 1};
}

void flatten_into(const ForcingTerm& t, std::vector<ForcingTerm>& out) {
    if (t.kind() == Kind::Product) {
        for (const ForcingTerm& f : t.factors())
            flatten_into(f, out);
    } else if (t.kind() != Kind::One) {
        out.push_back(t);
    }
}

} // namespace

ForcingTerm term_normalize(const ForcingTerm& t) {
    switch (t.kind()) {
        case Kind::ReducedPower: {
            ForcingTerm base = term_normalize(t.base());
            std::uint64_t k = t.rp_iterations();
            if (base.kind() == Kind::ReducedPower) {
                k += base.rp_iterations();
                base = base.base();
            }
            return k == 0 ? base : ForcingTerm::reduced_power(k, std::move(base));
        }
        case Kind::Power: {
            ForcingTerm base = term_normalize(t.base());
            if (base.kind() == Kind::One)
                return base;
            TermExponent e = t.exponent();
            if (e.kind == TermExponent::Kind::Nat) {
                if (base.kind() == Kind::Power &&
                    base.exponent().kind == TermExponent::Kind::Nat) {
                    e.n *= base.exponent().n;
                    base = base.base();
                }
                if (e.n == 1)
                    return base;
            }
            return ForcingTerm::power(std::move(base), e);
        }
        case Kind::Product: {
            std::vector<ForcingTerm> flat;
            for (const ForcingTerm& f : t.factors())
                flatten_into(term_normalize(f), flat);

            // Merge equal factors into natural powers, first occurrence wins
            // the position.
            std::vector<std::pair<ForcingTerm, std::uint64_t>> groups;
            for (const ForcingTerm& f : flat) {
                auto [base, count] = factor_multiplicity(f);
                bool found = false;
                for (auto& g : groups)
                    if (g.first == base) {
                        g.second += count;
                        found = true;
                        break;
                    }
                if (!found)
                    groups.emplace_back(std::move(base), count);
            }

            std::vector<ForcingTerm> factors;
            for (auto& [base, count] : groups)
                factors.push_back(count == 1 ? base
                                             : ForcingTerm::power(base, TermExponent::nat(count)));
            if (factors.empty())
                return ForcingTerm::one();
            if (factors.size() == 1)
                return factors.front();
            return ForcingTerm::product(std::move(factors));
        }
        default:
            return t;
    }
}

namespace {

bool gamma_is_bare(const OrdinalCNF& g) {
    return g.is_finite() || g == OrdinalCNF::omega();
}

std::string render_gamma(const OrdinalCNF& g) {
    std::string s = render_ordinal(g);
    return gamma_is_bare(g) ? s : "(" + s + ")";
}

// The quotient algebra underneath a reduced power, without the trailing "+".
std::string render_algebra(const ForcingTerm& t) {
    switch (t.kind()) {
        case Kind::PFin:
            return "P(w)/Fin";
        case Kind::QuotientBase:
            return "P(w^" + render_gamma(t.gamma()) + ")/I_{w^" + render_gamma(t.gamma()) + "}";
        case Kind::QuotientIdeal:
            return "P(w)/" + t.ideal_name();
        default:
            return render_term(t);
    }
}

std::string render_exponent(const TermExponent& e) {
    switch (e.kind) {
        case TermExponent::Kind::Nat:
            return std::to_string(e.n);
        case TermExponent::Kind::Omega:
            return "w";
        default:
            return "mu";
    }
}

} // namespace

std::string render_term(const ForcingTerm& t) {
    switch (t.kind()) {
        case Kind::One:
            return "1";
        case Kind::Cohen:
            return "Cohen";
        case Kind::PFin:
            return "(P(w)/Fin)+";
        case Kind::PDeltaED:
            return "(P(Delta)/ED)+";
        case Kind::PFinxFin:
            return "(P(wxw)/(FinxFin))+";
        case Kind::SacksIter:
            return "S*pi";
        case Kind::QuotientBase:
        case Kind::QuotientIdeal:
            return "(" + render_algebra(t) + ")+";
        case Kind::ReducedPower:
            return "(rp^" + std::to_string(t.rp_iterations()) + "(" + render_algebra(t.base()) +
                   "))+";
        case Kind::Product: {
            std::string out;
            for (const ForcingTerm& f : t.factors()) {
                if (!out.empty())
                    out += " x ";
                out += render_term(f);
            }
            return out;
        }
        case Kind::Power:
            return "(" + render_term(t.base()) + ")^" + render_exponent(t.exponent());
    }
    return {};
}

bool is_sigma_closed_atomless_continuum(const ForcingTerm& t) {
    switch (t.kind()) {
        case Kind::PFin:
        case Kind::PDeltaED:
        case Kind::PFinxFin:
        case Kind::QuotientBase:
        case Kind::QuotientIdeal:
        case Kind::ReducedPower:
            return true;
        case Kind::Power:
            return t.exponent().kind != TermExponent::Kind::Omega &&
                   is_sigma_closed_atomless_continuum(t.base());
        case Kind::Product:
            return std::all_of(t.factors().begin(), t.factors().end(),
                               [](const ForcingTerm& f) {
                                   return is_sigma_closed_atomless_continuum(f);
                               });
        default:
            return false;  // One is atomic; Cohen and the Sacks iteration are not sigma-closed
    }
}

ForcingTerm sq_formula(const OrdinalCNF& a) {
    if (ord_compare(a, OrdinalCNF::omega()) == std::strong_ordering::less)
        throw input_error("the quotient formula applies to ordinals >= w; "
                          "finite ordinals have the one-point poset of copies");
    std::vector<ForcingTerm> factors;
    for (const auto& term : a.terms()) {
        if (term.exponent().is_zero())
            continue;  // the finite remainder does not contribute
        ExponentSplit split = exponent_split(term.exponent());
        ForcingTerm base = split.gamma == OrdinalCNF::natural(1)
                               ? ForcingTerm::pfin()
                               : ForcingTerm::quotient_base(split.gamma);
        factors.push_back(
            ForcingTerm::power(ForcingTerm::reduced_power(split.r, std::move(base)),
                               TermExponent::nat(term.coeff())));
    }
    return term_normalize(ForcingTerm::product(std::move(factors)));
}

} // namespace copra
