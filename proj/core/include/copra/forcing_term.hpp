#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "copra/ordinal.hpp"

namespace copra {

/// Exponent of a symbolic power: a positive natural, omega, or the symbol mu.
struct TermExponent {
    enum class Kind { Nat, Omega, Mu };

    Kind kind = Kind::Nat;
    std::uint64_t n = 1;

    static TermExponent nat(std::uint64_t v) { return {Kind::Nat, v}; }
    static TermExponent omega() { return {Kind::Omega, 0}; }
    static TermExponent mu() { return {Kind::Mu, 0}; }

    bool operator==(const TermExponent&) const = default;
};

/// A symbolic forcing-equivalence class: an algebraic term over a fixed set
/// of benchmark posets, closed under finite products, powers and reduced
/// powers.  Values are immutable and cheaply copyable.
class ForcingTerm {
public:
    enum class Kind {
        One,            // trivial forcing
        Cohen,          // reversed binary tree
        PFin,           // (P(w)/Fin)+
        PDeltaED,       // (P(Delta)/ED)+
        PFinxFin,       // (P(wxw)/(FinxFin))+
        SacksIter,      // Sacks forcing followed by a sigma-closed iterand
        QuotientBase,   // (P(w^gamma)/I_{w^gamma})+ for a limit gamma
        QuotientIdeal,  // (P(w)/I)+ for a named ideal
        ReducedPower,   // (rp^k(base algebra))+
        Product,
        Power,
    };

    ForcingTerm() : ForcingTerm(one()) {}

    static ForcingTerm one();
    static ForcingTerm cohen();
    static ForcingTerm pfin();
    static ForcingTerm pdelta_ed();
    static ForcingTerm pfinxfin();
    static ForcingTerm sacks_iter();
    static ForcingTerm quotient_base(OrdinalCNF gamma);
    static ForcingTerm quotient_ideal(std::string name);
    static ForcingTerm reduced_power(std::uint64_t iterations, ForcingTerm base);
    static ForcingTerm product(std::vector<ForcingTerm> factors);
    static ForcingTerm power(ForcingTerm base, TermExponent exponent);

    Kind kind() const;
    const OrdinalCNF& gamma() const;                // QuotientBase
    const std::string& ideal_name() const;          // QuotientIdeal
    std::uint64_t rp_iterations() const;            // ReducedPower
    const ForcingTerm& base() const;                // ReducedPower, Power
    const std::vector<ForcingTerm>& factors() const;// Product
    const TermExponent& exponent() const;           // Power

    bool operator==(const ForcingTerm& other) const;

private:
    struct Node;
    explicit ForcingTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static ForcingTerm leaf(Kind kind);

    std::shared_ptr<const Node> node_;
};

/// Flattens nested products, drops trivial factors, collapses rp towers and
/// unit powers, and merges equal factors into natural powers, preserving
/// first-occurrence order.  Idempotent.
ForcingTerm term_normalize(const ForcingTerm& t);

/// Canonical ASCII rendering, e.g. ((P(w)/Fin)+)^2.
std::string render_term(const ForcingTerm& t);

/// True for quotient-style terms (and their products and powers): sigma-closed,
/// atomless, of size continuum.  Those are the terms a CH-mode rewrite may
/// collapse to (P(w)/Fin)+.
bool is_sigma_closed_atomless_continuum(const ForcingTerm& t);

/// The separative quotient of the poset of copies of an infinite ordinal,
/// read off its normal form: each term w^(gamma+r)*s contributes the factor
/// ((rp^r of the quotient algebra at gamma))+ raised to s, and the finite
/// remainder is dropped.  Requires a >= w.
ForcingTerm sq_formula(const OrdinalCNF& a);

} // namespace copra
