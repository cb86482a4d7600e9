#include "copra/ordinal.hpp"

#include <algorithm>
#include <cctype>

#include "copra/errors.hpp"

namespace copra {

OrdinalCNF OrdinalCNF::natural(std::uint64_t n) {
    OrdinalCNF a;
    if (n > 0)
        a.terms_.emplace_back(OrdinalCNF{}, n);
    return a;
}

OrdinalCNF OrdinalCNF::omega() {
    return omega_power(natural(1));
}

OrdinalCNF OrdinalCNF::omega_power(OrdinalCNF exponent, std::uint64_t coeff) {
    OrdinalCNF a;
    if (coeff > 0)
        a.terms_.emplace_back(std::move(exponent), coeff);
    return a;
}

OrdinalCNF OrdinalCNF::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coeff() == 0)
            throw input_error("normal-form coefficients must be positive");
        if (i + 1 < terms.size() &&
            ord_compare(terms[i].exponent(), terms[i + 1].exponent()) !=
                std::strong_ordering::greater)
            throw input_error("normal-form exponents must strictly decrease");
    }
    OrdinalCNF a;
    a.terms_ = std::move(terms);
    return a;
}

bool OrdinalCNF::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent().is_zero());
}

std::uint64_t OrdinalCNF::finite_part() const {
    if (!terms_.empty() && terms_.back().exponent().is_zero())
        return terms_.back().coeff();
    return 0;
}

std::uint64_t OrdinalCNF::as_natural() const {
    if (!is_finite())
        throw input_error("ordinal is infinite");
    return finite_part();
}

std::strong_ordering ord_compare(const OrdinalCNF& a, const OrdinalCNF& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        auto ce = ord_compare(ta[i].exponent(), tb[i].exponent());
        if (ce != std::strong_ordering::equal)
            return ce;
        if (ta[i].coeff() != tb[i].coeff())
            return ta[i].coeff() <=> tb[i].coeff();
    }
    return ta.size() <=> tb.size();
}

OrdinalCNF ord_add(const OrdinalCNF& a, const OrdinalCNF& b) {
    if (b.is_zero())
        return a;
    if (a.is_zero())
        return b;
    const OrdinalCNF& lead_exp = b.terms().front().exponent();

    std::vector<OrdinalCNF::Term> terms;
    std::uint64_t merged = b.terms().front().coeff();
    for (const auto& t : a.terms()) {
        auto c = ord_compare(t.exponent(), lead_exp);
        if (c == std::strong_ordering::greater)
            terms.push_back(t);
        else if (c == std::strong_ordering::equal)
            merged += t.coeff();
        // terms of a below b's leading exponent are absorbed
    }
    terms.emplace_back(lead_exp, merged);
    terms.insert(terms.end(), b.terms().begin() + 1, b.terms().end());
    return OrdinalCNF::from_terms(std::move(terms));
}

OrdinalCNF ord_mul(const OrdinalCNF& a, const OrdinalCNF& b) {
    if (a.is_zero() || b.is_zero())
        return OrdinalCNF{};
    OrdinalCNF result;
    const auto& lead = a.terms().front();
    for (const auto& t : b.terms()) {
        OrdinalCNF piece;
        if (t.exponent().is_zero()) {
            // right factor finite: scale the leading coefficient, keep the tail
            std::vector<OrdinalCNF::Term> terms;
            terms.reserve(a.terms().size());
            terms.emplace_back(lead.exponent(), lead.coeff() * t.coeff());
            terms.insert(terms.end(), a.terms().begin() + 1, a.terms().end());
            piece = OrdinalCNF::from_terms(std::move(terms));
        } else {
            piece = OrdinalCNF::omega_power(ord_add(lead.exponent(), t.exponent()), t.coeff());
        }
        result = ord_add(result, piece);
    }
    return result;
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    std::uint64_t parse_nat() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw parse_error("expected a number", pos);
        std::uint64_t n = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (n > (UINT64_MAX - 9) / 10)
                throw parse_error("number is too large", pos);
            n = n * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            ++pos;
        }
        return n;
    }

    // exponent := "(" ordinal ")" | "w" | nat
    OrdinalCNF parse_exponent() {
        skip_ws();
        if (eat('(')) {
            OrdinalCNF e = parse_sum();
            if (!eat(')'))
                throw parse_error("expected ')'", pos);
            return e;
        }
        if (pos < text.size() && text[pos] == 'w') {
            ++pos;
            return OrdinalCNF::omega();
        }
        return OrdinalCNF::natural(parse_nat());
    }

    // term := "w" (("^" | "**") exponent)? ("*" nat)? | nat
    OrdinalCNF parse_term() {
        skip_ws();
        if (pos >= text.size())
            throw parse_error("expected a term", pos);
        if (text[pos] != 'w')
            return OrdinalCNF::natural(parse_nat());
        ++pos;
        OrdinalCNF exponent = OrdinalCNF::natural(1);
        skip_ws();
        if (pos + 1 < text.size() && text[pos] == '*' && text[pos + 1] == '*') {
            pos += 2;
            exponent = parse_exponent();
        } else if (eat('^')) {
            exponent = parse_exponent();
        }
        std::uint64_t coeff = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '*' &&
            !(pos + 1 < text.size() && text[pos + 1] == '*')) {
            ++pos;
            coeff = parse_nat();
        }
        return OrdinalCNF::omega_power(std::move(exponent), coeff);
    }

    OrdinalCNF parse_sum() {
        OrdinalCNF value = parse_term();
        while (eat('+'))
            value = ord_add(value, parse_term());
        return value;
    }
};

bool exponent_is_bare(const OrdinalCNF& e) {
    return e.is_finite() || e == OrdinalCNF::omega();
}

} // namespace

OrdinalCNF parse_ordinal(const std::string& text) {
    Parser p{text};
    OrdinalCNF value = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size())
        throw parse_error("unexpected trailing input", p.pos);
    return value;
}

std::string render_ordinal(const OrdinalCNF& a) {
    if (a.is_zero())
        return "0";
    std::string out;
    for (const auto& t : a.terms()) {
        if (!out.empty())
            out += " + ";
        if (t.exponent().is_zero()) {
            out += std::to_string(t.coeff());
            continue;
        }
        out += "w";
        if (t.exponent() != OrdinalCNF::natural(1)) {
            out += "^";
            if (exponent_is_bare(t.exponent()))
                out += render_ordinal(t.exponent());
            else
                out += "(" + render_ordinal(t.exponent()) + ")";
        }
        if (t.coeff() != 1)
            out += "*" + std::to_string(t.coeff());
    }
    return out;
}

bool is_indivisible_ordinal(const OrdinalCNF& a) {
    if (a.is_zero())
        throw input_error("indivisibility is defined for ordinals >= 1");
    return a.terms().size() == 1 && a.terms()[0].coeff() == 1 &&
           !a.terms()[0].exponent().is_zero();
}

ExponentSplit exponent_split(const OrdinalCNF& e) {
    if (e.is_zero())
        throw input_error("exponent split requires an ordinal >= 1");
    if (e.is_finite())
        return {OrdinalCNF::natural(1), e.as_natural() - 1};
    std::uint64_t r = e.finite_part();
    std::vector<OrdinalCNF::Term> limit_terms;
    for (const auto& t : e.terms())
        if (!t.exponent().is_zero())
            limit_terms.push_back(t);
    return {OrdinalCNF::from_terms(std::move(limit_terms)), r};
}

} // namespace copra
