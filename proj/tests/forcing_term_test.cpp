#include <doctest.h>

#include "copra/errors.hpp"
#include "copra/forcing_term.hpp"
#include "copra/ordinal.hpp"

using namespace copra;

TEST_CASE("term rendering of the benchmark posets") {
    CHECK(render_term(ForcingTerm::one()) == "1");
    CHECK(render_term(ForcingTerm::cohen()) == "Cohen");
    CHECK(render_term(ForcingTerm::pfin()) == "(P(w)/Fin)+");
    CHECK(render_term(ForcingTerm::pdelta_ed()) == "(P(Delta)/ED)+");
    CHECK(render_term(ForcingTerm::pfinxfin()) == "(P(wxw)/(FinxFin))+");
    CHECK(render_term(ForcingTerm::sacks_iter()) == "S*pi");
    CHECK(render_term(ForcingTerm::quotient_base(OrdinalCNF::omega())) ==
          "(P(w^w)/I_{w^w})+");
    CHECK(render_term(ForcingTerm::quotient_ideal("J")) == "(P(w)/J)+");
    CHECK(render_term(ForcingTerm::reduced_power(1, ForcingTerm::quotient_ideal("J"))) ==
          "(rp^1(P(w)/J))+");
    CHECK(render_term(ForcingTerm::reduced_power(2, ForcingTerm::pfin())) ==
          "(rp^2(P(w)/Fin))+");
    CHECK(render_term(ForcingTerm::power(ForcingTerm::pfin(), TermExponent::nat(2))) ==
          "((P(w)/Fin)+)^2");
    CHECK(render_term(ForcingTerm::power(ForcingTerm::cohen(), TermExponent::omega())) ==
          "(Cohen)^w");
}

TEST_CASE("normalization drops units and merges powers") {
    ForcingTerm t1 = term_normalize(
        ForcingTerm::product({ForcingTerm::one(), ForcingTerm::pfin()}));
    CHECK(t1 == ForcingTerm::pfin());

    ForcingTerm t2 = term_normalize(
        ForcingTerm::product({ForcingTerm::pfin(), ForcingTerm::pfin()}));
    CHECK(render_term(t2) == "((P(w)/Fin)+)^2");

    ForcingTerm t3 = term_normalize(ForcingTerm::power(ForcingTerm::cohen(),
                                                       TermExponent::nat(1)));
    CHECK(t3 == ForcingTerm::cohen());

    ForcingTerm nested = term_normalize(ForcingTerm::product(
        {ForcingTerm::product({ForcingTerm::pfin(), ForcingTerm::one()}),
         ForcingTerm::power(ForcingTerm::pfin(), TermExponent::nat(2)),
         ForcingTerm::pdelta_ed()}));
    CHECK(render_term(nested) == "((P(w)/Fin)+)^3 x (P(Delta)/ED)+");

    ForcingTerm rp = term_normalize(
        ForcingTerm::reduced_power(1, ForcingTerm::reduced_power(2, ForcingTerm::pfin())));
    CHECK(render_term(rp) == "(rp^3(P(w)/Fin))+");
    CHECK(term_normalize(ForcingTerm::reduced_power(0, ForcingTerm::pfin())) ==
          ForcingTerm::pfin());
}

TEST_CASE("normalization is idempotent") {
    std::vector<ForcingTerm> samples = {
        ForcingTerm::product({ForcingTerm::one(), ForcingTerm::one()}),
        ForcingTerm::product({ForcingTerm::pfin(), ForcingTerm::cohen(),
                              ForcingTerm::pfin()}),
        ForcingTerm::power(ForcingTerm::power(ForcingTerm::pfin(), TermExponent::nat(2)),
                           TermExponent::nat(3)),
        ForcingTerm::product(
            {ForcingTerm::power(ForcingTerm::cohen(), TermExponent::omega()),
             ForcingTerm::sacks_iter()}),
    };
    for (const ForcingTerm& t : samples) {
        ForcingTerm once = term_normalize(t);
        CHECK(term_normalize(once) == once);
    }
    CHECK(render_term(term_normalize(samples[0])) == "1");
    CHECK(render_term(term_normalize(samples[2])) == "((P(w)/Fin)+)^6");
}

TEST_CASE("the quotient formula for ordinal copies") {
    CHECK(render_term(sq_formula(parse_ordinal("w"))) == "(P(w)/Fin)+");
    CHECK(render_term(sq_formula(parse_ordinal("w+w"))) == "((P(w)/Fin)+)^2");
    CHECK(render_term(sq_formula(parse_ordinal("w^2"))) == "(rp^1(P(w)/Fin))+");
    CHECK(render_term(sq_formula(parse_ordinal("w^2*3 + w*2 + 5"))) ==
          "((rp^1(P(w)/Fin))+)^3 x ((P(w)/Fin)+)^2");
    CHECK(render_term(sq_formula(parse_ordinal("w^(w+2)*5 + w^3*2"))) ==
          "((rp^2(P(w^w)/I_{w^w}))+)^5 x ((rp^2(P(w)/Fin))+)^2");
    CHECK_THROWS_AS(sq_formula(parse_ordinal("5")), input_error);
}

TEST_CASE("sigma-closed atomless continuum detection gates the CH rewrite") {
    CHECK(is_sigma_closed_atomless_continuum(ForcingTerm::pfin()));
    CHECK(is_sigma_closed_atomless_continuum(
        ForcingTerm::power(ForcingTerm::pfin(), TermExponent::nat(2))));
    CHECK(is_sigma_closed_atomless_continuum(ForcingTerm::pdelta_ed()));
    CHECK(is_sigma_closed_atomless_continuum(ForcingTerm::pfinxfin()));
    CHECK_FALSE(is_sigma_closed_atomless_continuum(ForcingTerm::one()));
    CHECK_FALSE(is_sigma_closed_atomless_continuum(ForcingTerm::cohen()));
    CHECK_FALSE(is_sigma_closed_atomless_continuum(ForcingTerm::sacks_iter()));
    CHECK_FALSE(is_sigma_closed_atomless_continuum(
        ForcingTerm::power(ForcingTerm::cohen(), TermExponent::omega())));
}

TEST_CASE("inputs below w have only plain quotient bases") {
    // every factor of the formula for alpha < w^w is built on P(w)/Fin
    OrdinalCNF a = parse_ordinal("w^4*2 + w^3 + w*6 + 9");
    ForcingTerm t = sq_formula(a);
    REQUIRE(t.kind() == ForcingTerm::Kind::Product);
    for (const ForcingTerm& f : t.factors()) {
        const ForcingTerm* leafward = &f;
        while (leafward->kind() == ForcingTerm::Kind::Power ||
               leafward->kind() == ForcingTerm::Kind::ReducedPower)
            leafward = &leafward->base();
        CHECK(leafward->kind() == ForcingTerm::Kind::PFin);
    }
}
