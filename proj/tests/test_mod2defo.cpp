#include "doctest.h"

#include "biserial/errors.hpp"
#include "biserial/mod2defo.hpp"

using namespace biserial;

TEST_CASE("uniserial deformation rings") {
    struct C {
        const char* fam;
        int d;
        const char* word;
        const char* verdict;
    };
    for (C c : {C{"psl1", 3, "be- de- et-", "k[t]/(t^2)"}, C{"psl1", 4, "be- de- et-", "k[t]/(t^4)"},
                C{"psl1", 5, "be ga et", "k[t]/(t^8)"}, C{"psl2", 3, "de", "k[t]/(t^2)"},
                C{"psl2", 4, "de", "k[t]/(t^4)"}, C{"a7", 3, "1_1", "k[t]/(t^2)"}}) {
        Presentation p = build_family(c.fam, c.d);
        UdrMod2Report r = verify_uniserial_udr(string_module(p, parse_word(p, c.word)));
        CHECK(r.verdict == c.verdict);
        REQUIRE(r.lift.has_value());
        CHECK(r.lift->total_dim() % string_module(p, parse_word(p, c.word)).total_dim() == 0);
        auto j = to_json(r);
        CHECK(j["ok"] == true);
    }
}

TEST_CASE("the lift for psl1(3) is the uniserial et de be ga et de be") {
    Presentation p = build_psl1(3);
    UdrMod2Report r = verify_uniserial_udr(string_module(p, parse_word(p, "be- de- et-")));
    REQUIRE(r.lift.has_value());
    CHECK(is_isomorphic(*r.lift, string_module(p, parse_word(p, "et de be ga et de be"))));
    CHECK(series_text(radical_series(*r.lift)) == "(1),(0),(2),(0),(1),(0),(2),(0)");
}

TEST_CASE("failed hypotheses are named") {
    Presentation p = build_psl1(3);
    Representation S1 = string_module(p, StringWord::trivial_at(1));
    UdrMod2Report r = uniserial_udr_report(S1);
    CHECK(!r.ok());
    REQUIRE(r.find("ext1_is_k") != nullptr);
    CHECK(!r.find("ext1_is_k")->passed);
    CHECK(r.verdict.empty());
    try {
        verify_uniserial_udr(S1);
        FAIL("expected HypothesisFailed");
    } catch (const HypothesisFailed& e) {
        CHECK(e.which() == "ext1_is_k");
    }
    CHECK_THROWS_AS(uniserial_udr_report(string_module(p, parse_word(p, "be- et"))), NotUniserial);
}

TEST_CASE("a7 middle term") {
    Presentation p = build_a7();
    Representation Y = string_module(p, parse_word(p, "be al- ga et"));
    Representation P2 = projective_module(p, 2);
    Representation X = direct_sum(projective_module(p, 1), quotient(P2, socle_space(P2)));
    MiddleTermReport r = middle_term_report(Y, X);
    CHECK(r.holds);
    CHECK(!r.split);
    CHECK(r.hom_dim == 3);
    MiddleTermReport s = middle_term_report(Y, direct_sum(Y, Y));
    CHECK(s.split);
    CHECK(!s.holds);
    CHECK_THROWS_AS(middle_term_report(Y, P2), DimensionMismatch);
}
