#include "doctest.h"

#include "biserial/errors.hpp"
#include "biserial/homology.hpp"

using namespace biserial;

TEST_CASE("string modules: dimension, relations, inverse word") {
    for (auto p : {build_psl1(3), build_psl2(3), build_a7()}) {
        for (const StringWord& w : enumerate_strings(p, 7)) {
            Representation M = string_module(p, w);
            CHECK(M.total_dim() == w.length() + 1);
            CHECK(check_relations(M).ok);
            if (w.length() <= 4) CHECK(is_isomorphic(M, string_module(p, inverse(w))));
        }
    }
}

TEST_CASE("string modules are indecomposable and identified") {
    Presentation p = build_psl1(3);
    for (const StringWord& w : enumerate_strings(p, 5)) {
        Representation M = string_module(p, w);
        CHECK(is_indecomposable(M));
        auto id = identify_string(M);
        REQUIRE(id.has_value());
        CHECK(canonical_string(p, *id) == canonical_string(p, w));
    }
}

TEST_CASE("band modules") {
    Presentation p = build_psl1(3);
    Field F(2);
    for (const Band& b : enumerate_bands(p, 8))
        for (Elem lam : F.units())
            for (int m : {1, 2}) {
                Representation B = band_module(p, b, lam, m, F);
                CHECK(B.total_dim() == m * b.length());
                CHECK(check_relations(B).ok);
                if (m == 1 && b.length() <= 4) CHECK(is_indecomposable(B));
            }
    const Band b = enumerate_bands(p, 8).front();
    CHECK_THROWS(band_module(p, b, 0, 1, F));
    // different lambdas give different modules
    CHECK(!is_isomorphic(band_module(p, b, 1, 1, F), band_module(p, b, 2, 1, F)));
}

TEST_CASE("radical series of uniserial strings") {
    Presentation p = build_psl1(3);
    Representation Y = string_module(p, parse_word(p, "be- de- et-"));
    CHECK(is_uniserial(Y));
    CHECK(series_text(radical_series(Y)) == "(1),(0),(2),(0)");
    Representation Z = string_module(p, parse_word(p, "be- et"));
    CHECK(!is_uniserial(Z));
    CHECK(dimension_vector(Z) == std::vector<int>{1, 1, 1});
}

TEST_CASE("quotient, kernel and cokernel dimensions") {
    Presentation p = build_psl2(3);
    for (int u = 0; u < 3; ++u) {
        Representation P = projective_module(p, u);
        Morphism inc;
        Representation R = submodule(P, radical(P), &inc);
        CHECK(is_injective(P.field(), inc));
        CHECK(is_intertwiner(R, P, inc));
        Morphism pr;
        Representation T = cokernel(P, inc, &pr);
        CHECK(T.total_dim() == 1);
        CHECK(is_surjective(P.field(), pr));
        CHECK(kernel(P, pr).total_dim() == R.total_dim());
    }
}

TEST_CASE("representation JSON round trip") {
    Presentation p = build_a7();
    Field F(2);
    std::vector<Representation> mods = {string_module(p, parse_word(p, "be al- ga et")), projective_module(p, 0)};
    for (const Band& b : enumerate_bands(p, 6)) mods.push_back(band_module(p, b, 3, 2, F));
    for (const Representation& M : mods) {
        Representation N = representation_from_json(p, to_json(M));
        CHECK(N.dims() == M.dims());
        CHECK(N.field() == M.field());
        for (int a = 0; a < p.num_arrows(); ++a) CHECK(N.map(a).data() == M.map(a).data());
        CHECK(to_json(N) == to_json(M));
    }
}

TEST_CASE("field arithmetic") {
    for (int e = 1; e <= 4; ++e) {
        Field F(e);
        for (Elem a : F.units()) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            for (Elem b : F.units()) CHECK(F.mul(a, b) == F.mul(b, a));
        }
    }
    Field F4(2);
    Elem w = F4.primitive_cube_root();
    CHECK(w != 1);
    CHECK(F4.mul(w, F4.mul(w, w)) == 1);
}
