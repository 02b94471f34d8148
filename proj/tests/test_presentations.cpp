#include "doctest.h"

#include "biserial/errors.hpp"
#include "biserial/homology.hpp"

using namespace biserial;

TEST_CASE("every family validates") {
    for (auto p : {build_psl1(3), build_psl1(4), build_psl1(5), build_psl2(3), build_psl2(4), build_a7()}) {
        ValidationReport v = validate(p);
        for (const auto& c : v.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.witness);
        CHECK(p.derivation_errors().empty());
    }
}

TEST_CASE("arrow tables") {
    Presentation p = build_psl1(3);
    CHECK(p.num_vertices() == 3);
    CHECK(p.num_arrows() == 4);
    CHECK(p.arrow(p.arrow_index("be")).source == 1);
    CHECK(p.arrow(p.arrow_index("be")).target == 0);
    CHECK(p.arrow(p.arrow_index("de")).target == 2);
    CHECK_THROWS_AS(p.arrow_index("zz"), UnknownArrow);

    Presentation q = build_psl2(3);
    CHECK(q.num_arrows() == 6);
    CHECK(q.arrow(q.arrow_index("ka")).target == 2);
    CHECK(build_a7().arrow(build_a7().arrow_index("al")).source == 1);
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(build_psl1(2), InvalidParameter);
    CHECK_THROWS_AS(build_psl2(1), InvalidParameter);
    CHECK_THROWS_AS(build_family("psl9", 3), InvalidParameter);
}

TEST_CASE("JSON round trip keeps the hash") {
    for (auto p : {build_psl1(3), build_psl2(4), build_a7()}) {
        Presentation q = Presentation::from_json(p.to_json());
        CHECK(q.hash() == p.hash());
        CHECK(q.to_json() == p.to_json());
        CHECK(q.same_as(p));
    }
    CHECK(build_psl1(3).hash() != build_psl1(4).hash());
    CHECK(build_psl1(3).hash() == build_psl1(3).hash());
}

// dimension of P(u) from the Loewy pictures, counted by hand
TEST_CASE("projective dimensions") {
    for (int d = 3; d <= 5; ++d) {
        const int n = 1 << d, N = n / 4;
        Presentation p = build_psl1(d);
        CHECK(projective_module(p, 0).total_dim() == 2 * n);
        CHECK(projective_module(p, 1).total_dim() == n + 1);
        CHECK(projective_module(p, 2).total_dim() == n + 1);
        Presentation q = build_psl2(d);
        CHECK(projective_module(q, 0).total_dim() == 4);
        CHECK(projective_module(q, 1).total_dim() == 2 * N + 2);
        CHECK(projective_module(q, 2).total_dim() == 2 * N + 2);
    }
    Presentation a = build_a7();
    CHECK(projective_module(a, 0).total_dim() == 8);
    CHECK(projective_module(a, 1).total_dim() == 6);
    CHECK(projective_module(a, 2).total_dim() == 5);
}

TEST_CASE("projectives satisfy the relations and have simple socle") {
    for (auto p : {build_psl1(3), build_psl1(4), build_psl2(3), build_psl2(4), build_a7()})
        for (int u = 0; u < 3; ++u) {
            Representation P = projective_module(p, u);
            CHECK(check_relations(P).ok);
            CHECK(socle(P) == std::vector<int>{u});
            CHECK(top(P) == std::vector<int>{u});
        }
}

TEST_CASE("rad P1 / soc P1 for a7 is S1 plus a uniserial (0,2,0)") {
    Presentation p = build_a7();
    Representation P = projective_module(p, 1);
    Representation R = submodule(P, radical(P));
    Representation H = quotient(R, socle_space(R));
    CHECK(H.total_dim() == 4);
    CHECK(!is_indecomposable(H));
    Representation U = string_module(p, parse_word(p, "et de"));
    CHECK(series_text(radical_series(U)) == "(0),(2),(0)");
    CHECK(is_isomorphic(H, direct_sum(U, string_module(p, StringWord::trivial_at(1)))));
}
