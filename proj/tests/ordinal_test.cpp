#include <doctest.h>

#include "copra/errors.hpp"
#include "copra/generate.hpp"
#include "copra/ordinal.hpp"

#include "support/ordinal_oracle.hpp"

using namespace copra;

namespace {

OrdinalCNF ord(const std::string& text) { return parse_ordinal(text); }

} // namespace

TEST_CASE("parsing the expression grammar") {
    OrdinalCNF a = ord("w^2*3 + w*2 + 5");
    REQUIRE(a.terms().size() == 3);
    CHECK(a.terms()[0].exponent() == OrdinalCNF::natural(2));
    CHECK(a.terms()[0].coeff() == 3);
    CHECK(a.terms()[1].exponent() == OrdinalCNF::natural(1));
    CHECK(a.terms()[1].coeff() == 2);
    CHECK(a.terms()[2].exponent() == OrdinalCNF::natural(0));
    CHECK(a.terms()[2].coeff() == 5);

    CHECK(render_ordinal(ord("w + w")) == "w*2");
    CHECK(render_ordinal(ord("1 + w")) == "w");
    CHECK(render_ordinal(ord("w**2")) == "w^2");
    CHECK(render_ordinal(ord("0")) == "0");
    CHECK(render_ordinal(ord("w*0")) == "0");
    CHECK(render_ordinal(ord("w^(w*2)*4")) == "w^(w*2)*4");
    CHECK(ord("w^w*3") == ord_mul(ord("w^w"), ord("3")));

    CHECK_THROWS_AS(ord(""), parse_error);
    CHECK_THROWS_AS(ord("w^"), parse_error);
    CHECK_THROWS_AS(ord("3 5"), parse_error);
    CHECK_THROWS_AS(ord("w+"), parse_error);
}

TEST_CASE("rendering round-trips on random ordinals") {
    Rng rng(31);
    for (int it = 0; it < 300; ++it) {
        OrdinalCNF a = random_ordinal(rng, 4, 4, 5);
        CHECK(parse_ordinal(render_ordinal(a)) == a);
    }
    // nested exponents need parentheses
    OrdinalCNF nested =
        OrdinalCNF::omega_power(ord_add(OrdinalCNF::omega(), OrdinalCNF::natural(1)), 2);
    CHECK(render_ordinal(nested) == "w^(w + 1)*2");
    CHECK(parse_ordinal(render_ordinal(nested)) == nested);
    OrdinalCNF tower = OrdinalCNF::omega_power(OrdinalCNF::omega_power(OrdinalCNF::natural(2)));
    CHECK(render_ordinal(tower) == "w^(w^2)");
    CHECK(parse_ordinal(render_ordinal(tower)) == tower);
}

TEST_CASE("addition and multiplication on pinned instances") {
    CHECK(render_ordinal(ord_add(ord("w"), ord("1"))) == "w + 1");
    CHECK(render_ordinal(ord_add(ord("1"), ord("w"))) == "w");
    CHECK(ord_add(ord("w"), ord("1")) != ord_add(ord("1"), ord("w")));

    CHECK(ord_mul(ord("w"), ord("w")) == ord("w^2"));
    CHECK(ord_mul(ord("w+1"), ord("w")) == ord("w^2"));
    CHECK(render_ordinal(ord_mul(ord("w+1"), ord("w+2"))) == "w^2 + w*2 + 1");
    CHECK(render_ordinal(ord_mul(ord("2"), ord("w"))) == "w");
    CHECK(render_ordinal(ord_mul(ord("w"), ord("2"))) == "w*2");
}

TEST_CASE("arithmetic agrees with the transfinite-recursion oracle") {
    Rng rng(37);
    test::OrdinalOracle oracle;
    for (int it = 0; it < 300; ++it) {
        OrdinalCNF a = random_ordinal(rng, 2, 3, 3);
        OrdinalCNF b = random_ordinal(rng, 2, 3, 3);
        test::Tuple ta = test::to_tuple(a), tb = test::to_tuple(b);
        CHECK(test::from_tuple(oracle.add(ta, tb)) == ord_add(a, b));
        CHECK(test::from_tuple(oracle.mul(ta, tb)) == ord_mul(a, b));
    }
}

TEST_CASE("the expression parser never escapes the error taxonomy") {
    std::uint64_t state = 7;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    const std::string alphabet = "w^*+() 0123456789";
    for (int it = 0; it < 5000; ++it) {
        std::string text;
        int len = static_cast<int>(next() % 16);
        for (int i = 0; i < len; ++i)
            text += alphabet[next() % alphabet.size()];
        try {
            OrdinalCNF a = parse_ordinal(text);
            CHECK(parse_ordinal(render_ordinal(a)) == a);
        } catch (const parse_error&) {
            // malformed input is the common case here
        }
    }
}

TEST_CASE("indivisible ordinals are the powers of w") {
    CHECK(is_indivisible_ordinal(ord("w")));
    CHECK_FALSE(is_indivisible_ordinal(ord("w+w")));
    CHECK(is_indivisible_ordinal(ord("w^2")));
    CHECK_FALSE(is_indivisible_ordinal(ord("w^2*2")));
    CHECK_FALSE(is_indivisible_ordinal(ord("1")));
    CHECK_THROWS_AS(is_indivisible_ordinal(ord("0")), input_error);
}

TEST_CASE("exponent split into a limit-or-one head and a finite offset") {
    ExponentSplit s3 = exponent_split(ord("3"));
    CHECK(s3.gamma == OrdinalCNF::natural(1));
    CHECK(s3.r == 2);

    ExponentSplit sw = exponent_split(ord("w"));
    CHECK(sw.gamma == OrdinalCNF::omega());
    CHECK(sw.r == 0);

    ExponentSplit sw2 = exponent_split(ord("w+2"));
    CHECK(sw2.gamma == OrdinalCNF::omega());
    CHECK(sw2.r == 2);

    CHECK_THROWS_AS(exponent_split(ord("0")), input_error);

    Rng rng(41);
    for (int it = 0; it < 150; ++it) {
        OrdinalCNF e = random_ordinal(rng, 3, 3, 4);
        if (e.is_zero())
            continue;
        ExponentSplit split = exponent_split(e);
        CHECK(ord_add(split.gamma, OrdinalCNF::natural(split.r)) == e);
        CHECK((split.gamma == OrdinalCNF::natural(1) || split.gamma.is_limit()));
    }
}
