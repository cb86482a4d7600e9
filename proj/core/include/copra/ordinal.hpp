#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace copra {

/// An ordinal below epsilon_0 in Cantor normal form:
///   w^e_k * c_k + ... + w^e_0 * c_0
/// with strictly decreasing ordinal exponents and positive coefficients.
/// The empty term list is 0; a natural number n is the single term w^0 * n.
/// Values are immutable.
class OrdinalCNF {
public:
    class Term {
    public:
        Term(OrdinalCNF exponent, std::uint64_t coeff);

        const OrdinalCNF& exponent() const { return *exponent_; }
        std::uint64_t coeff() const { return coeff_; }

        bool operator==(const Term& other) const;

    private:
        std::shared_ptr<const OrdinalCNF> exponent_;
        std::uint64_t coeff_ = 0;
    };

    OrdinalCNF() = default;

    static OrdinalCNF natural(std::uint64_t n);
    static OrdinalCNF omega();
    /// w^exponent * coeff as a single term; coeff 0 gives 0.
    static OrdinalCNF omega_power(OrdinalCNF exponent, std::uint64_t coeff = 1);
    /// Builds from a ready normal form; exponents must strictly decrease and
    /// coefficients must be positive.
    static OrdinalCNF from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    /// The coefficient of w^0 (the trailing natural part).
    std::uint64_t finite_part() const;
    /// Finite value; only valid when is_finite().
    std::uint64_t as_natural() const;
    bool is_limit() const { return !is_zero() && finite_part() == 0; }

    bool operator==(const OrdinalCNF&) const = default;

private:
    std::vector<Term> terms_;
};

inline OrdinalCNF::Term::Term(OrdinalCNF exponent, std::uint64_t coeff)
    : exponent_(std::make_shared<const OrdinalCNF>(std::move(exponent))), coeff_(coeff) {}

inline bool OrdinalCNF::Term::operator==(const Term& other) const {
    return coeff_ == other.coeff_ && *exponent_ == *other.exponent_;
}

/// Ordinal order, lexicographic on the normal form.
std::strong_ordering ord_compare(const OrdinalCNF& a, const OrdinalCNF& b);

OrdinalCNF ord_add(const OrdinalCNF& a, const OrdinalCNF& b);
OrdinalCNF ord_mul(const OrdinalCNF& a, const OrdinalCNF& b);

/// Parses the expression grammar
///   ordinal := term ("+" term)*
///   term    := "w" (("^" | "**") exponent)? ("*" nat)? | nat
///   exponent:= "(" ordinal ")" | "w" | nat
/// and normalizes the result (so "w + w" yields w*2 and "1 + w" yields w).
/// Throws parse_error on malformed text.
OrdinalCNF parse_ordinal(const std::string& text);

/// Canonical rendering; parse_ordinal(render_ordinal(a)) == a.  Exponents
/// that are not plain naturals or a lone w are parenthesized.
std::string render_ordinal(const OrdinalCNF& a);

/// True iff a = w^b for some b >= 1: exactly one term, coefficient 1,
/// exponent at least 1.  Requires a >= 1.
bool is_indivisible_ordinal(const OrdinalCNF& a);

/// The unique decomposition e = gamma + r where gamma is 1 or a limit
/// ordinal and r is finite.  Requires e >= 1.
struct ExponentSplit {
    OrdinalCNF gamma;
    std::uint64_t r;
};

ExponentSplit exponent_split(const OrdinalCNF& e);

} // namespace copra
