#include "doctest.h"

#include <map>
#include <set>

#include "biserial/errors.hpp"
#include "biserial/strings.hpp"

using namespace biserial;

namespace {

std::vector<int> letter_keys(const std::vector<Letter>& w) {
    std::vector<int> k;
    for (const Letter& l : w) k.push_back(l.key());
    return k;
}

// composable letter sequences of length n, in paper order: s(w_i) = e(w_{i+1})
void composable(const Presentation& p, int n, std::vector<Letter>& cur, std::vector<std::vector<Letter>>& out) {
    if (int(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int a = 0; a < p.num_arrows(); ++a)
        for (bool inv : {false, true}) {
            Letter x{a, inv};
            if (!cur.empty()) {
                if (letter_source(p, cur.back()) != letter_target(p, x)) continue;
                if (cur.back() == x.inverse()) continue;
            }
            cur.push_back(x);
            composable(p, n, cur, out);
            cur.pop_back();
        }
}

}  // namespace

TEST_CASE("parse and format round trip") {
    Presentation p = build_psl1(3);
    for (const char* s : {"1_0", "1_2", "be", "be-", "be ga et", "be- de- et-", "ga de- et- ga- be- de- et- ga-"})
        CHECK(format_word(p, parse_word(p, s)) == s);
    CHECK_THROWS(parse_word(p, "xx"));
    CHECK_THROWS(parse_word(p, "1_7"));
}

TEST_CASE("string counts agree with brute force over composable words") {
    for (auto p : {build_psl1(3), build_psl2(3), build_a7()}) {
        std::map<int, int> lib;
        for (const StringWord& w : enumerate_strings(p, 7)) lib[w.length()]++;
        CHECK(lib[0] == p.num_vertices());
        for (int n = 1; n <= 7; ++n) {
            std::vector<std::vector<Letter>> all;
            std::vector<Letter> cur;
            composable(p, n, cur, all);
            std::set<std::vector<int>> classes;
            for (const auto& w : all) {
                StringWord s{w, -1, 1};
                if (!is_valid_string(p, s)) continue;
                auto a = letter_keys(w), b = letter_keys(inverse(s).letters);
                classes.insert(std::min(a, b));
            }
            CHECK_MESSAGE(lib[n] == int(classes.size()), "length " << n);
        }
    }
}

TEST_CASE("enumerated strings are canonical, valid and distinct") {
    Presentation p = build_psl2(4);
    std::set<std::vector<int>> seen;
    for (const StringWord& w : enumerate_strings(p, 8)) {
        CHECK(is_valid_string(p, w));
        CHECK(is_canonical(p, w));
        CHECK(canonical_string(p, inverse(w)) == w);
        if (!w.trivial()) CHECK(seen.insert(letter_keys(w.letters)).second);
    }
}

TEST_CASE("band counts agree with brute force over cyclic words") {
    Presentation p = build_psl1(3);
    const int maxF = p.max_forbidden_length();
    for (int n = 1; n <= 10; ++n) {
        std::vector<std::vector<Letter>> all;
        std::vector<Letter> cur;
        composable(p, n, cur, all);
        std::set<std::vector<int>> classes;
        for (const auto& w : all) {
            if (letter_source(p, w.back()) != letter_target(p, w.front()) || w.back() == w.front().inverse()) continue;
            bool dir = false, inv = false;
            for (const Letter& l : w) (l.inv ? inv : dir) = true;
            if (!dir || !inv) continue;
            bool power = false;
            for (int d = 1; d < n && !power; ++d) {
                if (n % d) continue;
                bool per = true;
                for (int i = d; i < n && per; ++i) per = w[i] == w[i - d];
                power = per;
            }
            if (power) continue;
            // every power must be a string; enough copies to cover any relation
            StringWord big;
            int copies = (maxF + 2) / n + 3;
            for (int k = 0; k < copies; ++k) big.letters.insert(big.letters.end(), w.begin(), w.end());
            if (!is_valid_string(p, big)) continue;
            std::vector<int> best;
            StringWord sw{w, -1, 1};
            for (const auto& v : {w, inverse(sw).letters})
                for (int r = 0; r < n; ++r) {
                    std::vector<Letter> rot(v.begin() + r, v.end());
                    rot.insert(rot.end(), v.begin(), v.begin() + r);
                    auto k = letter_keys(rot);
                    if (best.empty() || k < best) best = k;
                }
            classes.insert(best);
        }
        int lib = 0;
        for (const Band& b : enumerate_bands(p, n))
            if (b.length() == n) ++lib;
        CHECK_MESSAGE(lib == int(classes.size()), "length " << n);
    }
}

TEST_CASE("bands: parsing, canonical form and rejection") {
    Presentation p = build_psl1(3);
    for (const Band& b : enumerate_bands(p, 8)) {
        CHECK(is_band(p, b.letters));
        CHECK(parse_band(p, format_band(p, b)) == b);
        std::vector<Letter> rot(b.letters.begin() + 1, b.letters.end());
        rot.push_back(b.letters.front());
        CHECK(canonical_band(p, rot) == b);
    }
    CHECK_THROWS_AS(canonical_band(p, parse_word(p, "be ga").letters), NotABand);
}

TEST_CASE("hooks and cohooks can be removed again") {
    for (auto p : {build_psl1(3), build_a7()}) {
        for (const StringWord& w : enumerate_strings(p, 5))
            for (Side s : {Side::Left, Side::Right}) {
                // hooks cannot start from a peak, cohooks from a deep
                try {
                    StringWord h = add_hook(p, w, s);
                    if (is_valid_string(p, h) && h != w) {
                        auto back = remove_hook(p, h, s);
                        REQUIRE(back.has_value());
                        CHECK(canonical_string(p, *back) == canonical_string(p, w));
                    }
                } catch (const PeakDeepViolation&) {
                    CHECK((starts_on_peak(p, w) || ends_on_peak(p, w)));
                }
                StringWord c;
                try {
                    c = add_cohook(p, w, s);
                } catch (const PeakDeepViolation&) {
                    CHECK((starts_in_deep(p, w) || ends_in_deep(p, w)));
                    continue;
                }
                if (is_valid_string(p, c) && c != w) {
                    auto back = remove_cohook(p, c, s);
                    REQUIRE(back.has_value());
                    CHECK(canonical_string(p, *back) == canonical_string(p, w));
                }
            }
    }
}

TEST_CASE("tau involution on arrows swaps the arm pairs") {
    Presentation p = build_psl1(3);
    auto t = tau_involution(p);
    REQUIRE(int(t.size()) == p.num_arrows());
    for (int a = 0; a < p.num_arrows(); ++a) {
        CHECK(t[t[a]] == a);
        CHECK(p.arrow(t[a]).source == p.arrow(a).target);
        CHECK(p.arrow(t[a]).target == p.arrow(a).source);
    }
    for (const StringWord& w : enumerate_strings(p, 6)) CHECK(is_valid_string(p, tau_dual(p, w)));
}
