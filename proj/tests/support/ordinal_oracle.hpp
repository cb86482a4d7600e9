#pragma once

// Reference implementation of ordinal addition and multiplication below
// w^K, independent of the normal-form arithmetic in the library.  Ordinals
// are coefficient tuples; the operations are computed by the defining
// transfinite recursion: peel successors one at a time, and evaluate limits
// as suprema along canonical fundamental sequences.  The supremum of a
// sequence of tuples is detected from three samples, which is sound here
// because for fixed left argument both operations are eventually affine in
// the fundamental-sequence index.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "copra/ordinal.hpp"

namespace copra::test {

inline constexpr int kOracleExponents = 6;

// coeff[i] is the coefficient of w^i.
using Tuple = std::array<std::uint64_t, kOracleExponents>;

inline Tuple to_tuple(const OrdinalCNF& a) {
    Tuple t{};
    for (const auto& term : a.terms()) {
        if (!term.exponent().is_finite() ||
            term.exponent().as_natural() >= kOracleExponents)
            throw std::runtime_error("ordinal outside the oracle universe");
        t[term.exponent().as_natural()] = term.coeff();
    }
    return t;
}

inline OrdinalCNF from_tuple(const Tuple& t) {
    std::vector<OrdinalCNF::Term> terms;
    for (int i = kOracleExponents - 1; i >= 0; --i)
        if (t[i] > 0)
            terms.emplace_back(OrdinalCNF::natural(static_cast<std::uint64_t>(i)), t[i]);
    return OrdinalCNF::from_terms(std::move(terms));
}

class OrdinalOracle {
public:
    Tuple add(const Tuple& a, const Tuple& b) {
        auto key = std::make_pair(a, b);
        if (auto it = add_memo_.find(key); it != add_memo_.end())
            return it->second;
        Tuple result;
        if (is_zero(b)) {
            result = a;
        } else if (b[0] > 0) {  // successor step
            Tuple pred = b;
            --pred[0];
            result = add(a, pred);
            ++result[0];
        } else {
            result = limit_of([&](std::uint64_t k) { return add(a, fundamental(b, k)); });
        }
        add_memo_.emplace(key, result);
        return result;
    }

    Tuple mul(const Tuple& a, const Tuple& b) {
        if (is_zero(a) || is_zero(b))
            return Tuple{};
        auto key = std::make_pair(a, b);
        if (auto it = mul_memo_.find(key); it != mul_memo_.end())
            return it->second;
        Tuple result;
        if (b[0] > 0) {  // successor step
            Tuple pred = b;
            --pred[0];
            result = add(mul(a, pred), a);
        } else {
            result = limit_of([&](std::uint64_t k) { return mul(a, fundamental(b, k)); });
        }
        mul_memo_.emplace(key, result);
        return result;
    }

private:
    static bool is_zero(const Tuple& t) {
        for (std::uint64_t c : t)
            if (c)
                return false;
        return true;
    }

    // k-th element of the canonical fundamental sequence of a limit tuple:
    // decrement the lowest nonzero coefficient, put k one level below it.
    static Tuple fundamental(const Tuple& t, std::uint64_t k) {
        Tuple out = t;
        for (int j = 1; j < kOracleExponents; ++j)
            if (out[j] > 0) {
                --out[j];
                out[j - 1] = k;
                return out;
            }
        throw std::runtime_error("fundamental sequence of a non-limit");
    }

    // Supremum of an increasing sequence, from samples at k = 3, 4, 5: the
    // samples must agree above one coordinate and grow linearly in it; the
    // supremum zeroes that coordinate and everything below and bumps the
    // next one.
    template <typename F>
    static Tuple limit_of(F&& f) {
        Tuple s0 = f(3), s1 = f(4), s2 = f(5);
        int j = kOracleExponents - 1;
        while (j >= 0 && s0[j] == s1[j])
            --j;
        if (j < 0 || s1[j] <= s0[j] || s1[j] - s0[j] != s2[j] - s1[j])
            throw std::runtime_error("sequence is not eventually affine");
        for (int i = j + 1; i < kOracleExponents; ++i)
            if (s0[i] != s1[i] || s1[i] != s2[i])
                throw std::runtime_error("sequence varies above the growth coordinate");
        if (j + 1 >= kOracleExponents)
            throw std::runtime_error("oracle universe overflow");
        Tuple sup = s0;
        for (int i = 0; i <= j; ++i)
            sup[i] = 0;
        ++sup[j + 1];
        return sup;
    }

    std::map<std::pair<Tuple, Tuple>, Tuple> add_memo_;
    std::map<std::pair<Tuple, Tuple>, Tuple> mul_memo_;
};

inline OrdinalCNF oracle_add(const OrdinalCNF& a, const OrdinalCNF& b) {
    OrdinalOracle oracle;
    return from_tuple(oracle.add(to_tuple(a), to_tuple(b)));
}

inline OrdinalCNF oracle_mul(const OrdinalCNF& a, const OrdinalCNF& b) {
    OrdinalOracle oracle;
    return from_tuple(oracle.mul(to_tuple(a), to_tuple(b)));
}

} // namespace copra::test
