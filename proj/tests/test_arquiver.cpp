#include "doctest.h"

#include <set>

#include "biserial/arquiver.hpp"
#include "biserial/errors.hpp"

using namespace biserial;

namespace {

std::optional<StringWord> omega2_by_modules(const Presentation& p, const StringWord& s, int dir) {
    Representation M = string_module(p, s);
    Representation T = dir > 0 ? omega_power(M, 2) : omega_inverse(omega_inverse(M));
    auto w = identify_string(T);
    if (!w) return std::nullopt;
    return canonical_string(p, *w);
}

}  // namespace

// tau = Omega^2 for symmetric algebras: the hook formula must agree with modules
TEST_CASE("tau and its inverse agree with Omega^2 on modules") {
    for (auto p : {build_psl1(3), build_psl2(3), build_a7()})
        for (const StringWord& s : enumerate_strings(p, 6)) {
            if (is_projective_string(p, s)) continue;
            for (int dir : {1, -1}) {
                auto t = tau_string(p, s, dir);
                auto o = omega2_by_modules(p, s, dir);
                REQUIRE(o.has_value());
                REQUIRE(t.has_value());
                CHECK_MESSAGE(canonical_string(p, t->word) == *o, format_word(p, s) << " dir " << dir);
            }
        }
}

TEST_CASE("tau and tau inverse are mutually inverse") {
    Presentation p = build_psl1(3);
    for (const StringWord& s : enumerate_strings(p, 7)) {
        if (is_projective_string(p, s)) continue;
        auto t = tau_string(p, s, 1);
        REQUIRE(t.has_value());
        auto back = tau_string(p, t->word, -1);
        REQUIRE(back.has_value());
        CHECK(canonical_string(p, back->word) == canonical_string(p, s));
    }
}

// the AR sequence 0 -> tau M -> E -> M -> 0 is additive on dimension vectors
TEST_CASE("mesh additivity") {
    for (auto p : {build_psl1(3), build_psl2(3)})
        for (const StringWord& s : enumerate_strings(p, 6)) {
            if (is_projective_string(p, s)) continue;
            ArNeighbors nb = ar_neighbors(p, s);
            auto t = tau_string(p, s, 1);
            REQUIRE(t.has_value());
            std::vector<int> lhs = dimension_vector(string_module(p, s));
            std::vector<int> tv = dimension_vector(string_module(p, t->word));
            for (int v = 0; v < 3; ++v) lhs[v] += tv[v];
            std::vector<int> mid(3, 0);
            for (const StringWord& e : nb.predecessors()) {
                std::vector<int> dv = dimension_vector(string_module(p, e));
                for (int v = 0; v < 3; ++v) mid[v] += dv[v];
            }
            // a projective-injective middle summand P(u) appears when M is rad P(u) / soc P(u)
            if (lhs != mid) {
                bool fixed = false;
                for (int u = 0; u < 3 && !fixed; ++u) {
                    std::vector<int> pv = dimension_vector(projective_module(p, u));
                    std::vector<int> m2 = mid;
                    for (int v = 0; v < 3; ++v) m2[v] += pv[v];
                    fixed = m2 == lhs;
                }
                CHECK_MESSAGE(fixed, format_word(p, s));
            }
        }
}

TEST_CASE("projective strings are refused") {
    Presentation p = build_psl1(3);
    bool any = false;
    for (const StringWord& s : enumerate_strings(p, 9))
        if (is_projective_string(p, s)) {
            any = true;
            CHECK(is_projective(string_module(p, s)));
            CHECK_THROWS_AS(ar_neighbors(p, s), ProjectiveCenter);
        }
    CHECK(any);
}

TEST_CASE("component types") {
    Presentation p = build_psl1(3);
    CHECK(component_type(p, StringWord::trivial_at(1), 6).text() == "tube(3)");
    CHECK(component_type(p, StringWord::trivial_at(2), 6).text() == "tube(3)");
    CHECK(component_type(p, StringWord::trivial_at(0), 6).kind == ComponentType::Kind::ZAEvidence);
    CHECK(component_type(p, parse_word(p, "be- de- et-"), 6).kind == ComponentType::Kind::ZAEvidence);
    Presentation q = build_psl2(3);
    CHECK(component_type(q, parse_word(q, "be"), 6).text() == "tube(3)");
    Presentation a = build_a7();
    CHECK(component_type(a, StringWord::trivial_at(2), 6).text() == "tube(3)");
    CHECK(component_type(a, parse_word(a, "et de be"), 6).text() == "tube(3)");
}

TEST_CASE("component view graph export") {
    Presentation p = build_psl1(3);
    ComponentView v = component_view(p, StringWord::trivial_at(1), 3);
    CHECK(v.nodes.front() == StringWord::trivial_at(1));
    for (auto [a, b] : v.edges) {
        CHECK(a >= 0);
        CHECK(b < int(v.nodes.size()));
    }
    auto j = to_json(p, v);
    CHECK(j["directed"] == true);
    CHECK(j["nodes"].size() == v.nodes.size());
    CHECK(j["links"].size() == v.edges.size());
    std::string adj = adjacency_list(p, v);
    CHECK(adj.find("# 0: 1_1") != std::string::npos);
}

TEST_CASE("component index agrees with tau orbits") {
    Presentation p = build_psl1(3);
    ComponentIndex idx(p, 10);
    for (const StringWord& s : enumerate_strings(p, 6)) {
        if (is_projective_string(p, s)) {
            CHECK(idx.key(s).empty());
            continue;
        }
        auto t = tau_string(p, s, 1);
        REQUIRE(t.has_value());
        if (t->word.length() <= 10) CHECK(idx.key(s) == idx.key(t->word));
        for (const StringWord& n : ar_neighbors(p, s).successors())
            if (n.length() <= 10) CHECK(idx.key(n) == idx.key(s));
    }
}

TEST_CASE("classification does not depend on the number of workers") {
    Presentation p = build_a7();
    ClassifyOptions o;
    o.max_len = 8;
    o.band_max_len = 6;
    o.jobs = 1;
    auto a = to_json(classify_stable_k(p, o));
    o.jobs = 4;
    auto b = to_json(classify_stable_k(p, o));
    CHECK(a.dump() == b.dump());
}

TEST_CASE("stable End = k hits are closed under Omega") {
    Presentation p = build_psl1(3);
    ClassifyOptions o;
    o.max_len = 10;
    o.band_max_len = 0;
    auto t = classify_stable_k(p, o);
    std::set<std::string> hits;
    for (const ClassRow& r : t.rows)
        if (r.hit) hits.insert(r.word);
    for (const ClassRow& r : t.rows) {
        if (!r.hit) continue;
        auto w = omega_word(p, parse_word(p, r.word));
        REQUIRE(w.has_value());
        if (w->length() <= 10) CHECK_MESSAGE(hits.count(format_word(p, canonical_string(p, *w))), r.word);
    }
}

TEST_CASE("membership for the three families") {
    struct C {
        Presentation p;
        int len;
    };
    for (C c : {C{build_psl1(3), 10}, C{build_psl2(3), 10}, C{build_a7(), 10}}) {
        ClassifyOptions o;
        o.max_len = c.len;
        o.band_max_len = 8;
        auto t = classify_stable_k(c.p, o);
        auto m = verify_membership(c.p, t);
        for (const auto& f : m.failures) MESSAGE(f);
        CHECK(m.ok);
        CHECK(m.parts.size() == 3);
        auto j = to_json(t);
        CHECK(j["format"] == "biserial-classification");
        CHECK(to_markdown(t).find("|") != std::string::npos);
    }
}
