#include "biserial/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "biserial/arquiver.hpp"
#include "biserial/errors.hpp"
#include "biserial/mod2defo.hpp"
#include "biserial/parallel.hpp"
#include "biserial/wittrings.hpp"

namespace biserial {

using nlohmann::json;

const char* toolkit_version() { return "1.0.0"; }

bool SuiteReport::pass() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Item {
    std::string id, description;
    std::function<void(CheckRecord&)> run;
};

// Checks run on the worker pool; each writes only its own record.
void execute(SuiteReport& rep, std::vector<Item>& items, int jobs) {
    std::vector<CheckRecord> out(items.size());
    parallel_for(items.size(), jobs, [&](std::size_t i) {
        CheckRecord& r = out[i];
        r.id = items[i].id;
        r.description = items[i].description;
        auto t0 = Clock::now();
        try {
            items[i].run(r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.observed = std::string("error: ") + e.what();
        }
        r.runtime_ms = ms_since(t0);
    });
    std::sort(out.begin(), out.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    rep.checks = std::move(out);
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string str(int x) { return std::to_string(x); }

// ------------------------------------------------------------- paper data

void append_cycle(std::vector<int>& out, const std::vector<int>& cyc, int start, int count) {
    for (int k = 0; k < count; ++k) out.push_back(cyc[(start + k) % cyc.size()]);
}

// Radical series of P(u) read off the pictures of the projectives.
std::vector<std::vector<int>> expected_projective_series(const std::string& fam, int d, int u) {
    std::vector<std::vector<int>> L;
    auto layer = [&](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        L.push_back(v);
    };
    if (fam == "psl1") {
        const int n = 1 << d;  // Loewy length n + 1
        if (u == 0) {
            std::vector<int> a, b;
            append_cycle(a, {1, 0, 2, 0}, 0, n - 1);
            append_cycle(b, {2, 0, 1, 0}, 0, n - 1);
            layer({0});
            for (int k = 0; k < n - 1; ++k) layer({a[k], b[k]});
            layer({0});
        } else {
            std::vector<int> a;
            append_cycle(a, u == 1 ? std::vector<int>{1, 0, 2, 0} : std::vector<int>{2, 0, 1, 0}, 0, n + 1);
            for (int x : a) layer({x});
        }
    } else if (fam == "psl2") {
        const int N = 1 << (d - 2);
        if (u == 0) {
            layer({0});
            layer({1, 2});
            layer({0});
        } else {
            const int o = 3 - u;  // the other vertex of the long arm
            std::vector<int> arm;
            append_cycle(arm, {o, u}, 0, 2 * N - 1);
            layer({u});
            layer({0, arm[0]});
            for (int k = 1; k < int(arm.size()); ++k) layer({arm[k]});
            layer({u});
        }
    } else if (fam == "a7") {
        if (u == 0) {
            layer({0});
            layer({1, 2});
            layer({0, 0});
            layer({2, 1});
            layer({0});
        } else if (u == 1) {
            layer({1});
            layer({1, 0});
            layer({2});
            layer({0});
            layer({1});
        } else {
            for (int x : {2, 0, 1, 0, 2}) layer({x});
        }
    }
    return L;
}

std::string repeat(const std::string& s, int k) {
    std::string r;
    for (int i = 0; i < k; ++i) r += s;
    return r;
}

// A_{l,n} and A'_{l,n}, the modules of the S0 component with stable End = k
std::string a_module_word(int d, int l, int n, bool prime) {
    const int N = 1 << (d - 2);
    std::string block = prime ? "et de " + repeat("ga- be- de- et- ", N - 1) + "ga- be- "
                              : "be ga " + repeat("de- et- ga- be- ", N - 1) + "de- et- ";
    std::string w = repeat(block, n);
    static const char* tails[2][3] = {{"ga-", "", "be"}, {"de-", "", "et"}};
    w += tails[prime][l - 1];
    while (!w.empty() && w.back() == ' ') w.pop_back();
    return w;
}

// X_{l,1} and the endomorphism that keeps its stable End from being k
struct XModule {
    std::string word;
    HomDescriptor witness;
};

std::vector<XModule> x_modules(int d) {
    const int N = 1 << (d - 2), n = 1 << d;
    std::string mid = "ga " + repeat("de- et- ga- be- ", N - 1) + "de- et-";
    return {{mid + " ga-", {"-+", 1, n, 1}}, {mid, {"++", 1, n - 1, 0}}, {mid + " be", {"++", 1, n - 1, 0}}};
}

// the uniserial strings of length 4 for psl1: radical series (i,0,j,0) or (0,i,0,j)
const std::vector<std::string> kUniserial4 = {"be ga et", "be- de- et-", "ga et de", "ga- be- de-"};

// End = k among strings of length <= 9 for psl1(3)
const std::vector<std::string> kEndKStrings = {"1_0",      "1_1",   "1_2",   "be",       "ga",
                                               "de",       "et",    "be- de-", "be- et", "ga de-",
                                               "ga et",    "be ga et", "be- de- et-", "ga et de", "ga- be- de-"};

Presentation family_presentation(const SuiteParams& sp) {
    if (sp.family == "a7" && sp.d != 3) throw InvalidParameter("a7 only exists for d = 3");
    return build_family(sp.family, sp.d);
}

void require_family(const SuiteParams& sp, const std::string& fam, const std::string& suite) {
    if (sp.family != fam) throw InvalidParameter("suite " + suite + " needs --family " + fam);
}

// ------------------------------------------------------------------ suites

SuiteReport suite_projectives(const SuiteParams& sp) {
    Presentation p = family_presentation(sp);
    SuiteReport rep;
    rep.parameters = {{"family", sp.family}, {"d", sp.d}};
    rep.presentation_hash = p.hash();
    std::vector<Item> items;
    items.push_back({"presentation.valid", "the presentation passes every structural check", [p](CheckRecord& r) {
                         ValidationReport v = validate(p);
                         std::vector<std::string> bad;
                         for (const ValidationCheck& c : v.checks)
                             if (!c.passed) bad.push_back(c.name + ": " + c.witness);
                         r.expected = "all checks pass";
                         r.observed = bad.empty() ? "all " + str(int(v.checks.size())) + " checks pass" : join(bad, "; ");
                         r.pass = v.ok();
                     }});
    for (int u = 0; u < p.num_vertices(); ++u) {
        std::string P = "P" + str(u);
        items.push_back({P + ".series", "radical series of " + P, [p, u, sp](CheckRecord& r) {
                             r.expected = series_text(expected_projective_series(sp.family, sp.d, u));
                             r.observed = series_text(radical_series(projective_module(p, u)));
                             r.pass = r.expected == r.observed;
                         }});
        items.push_back({P + ".relations", P + " satisfies every relation", [p, u](CheckRecord& r) {
                             RelationCheck c = check_relations(projective_module(p, u));
                             r.expected = "ok";
                             r.observed = c.ok ? "ok" : c.witness;
                             r.pass = c.ok;
                         }});
        items.push_back({P + ".socle", P + " has simple socle S" + str(u), [p, u](CheckRecord& r) {
                             std::vector<int> s = socle(projective_module(p, u));
                             r.expected = "(" + str(u) + ")";
                             r.observed = series_text({s});
                             r.pass = r.expected == r.observed;
                         }});
    }
    if (sp.family == "psl1")
        items.push_back({"P1.dimension", "dim P1 = 2^d + 1", [p, sp](CheckRecord& r) {
                             r.expected = str((1 << sp.d) + 1);
                             r.observed = str(projective_module(p, 1).total_dim());
                             r.pass = r.expected == r.observed;
                         }});
    execute(rep, items, sp.jobs);
    return rep;
}

SuiteReport suite_end_k(const SuiteParams& sp) {
    require_family(sp, "psl1", "end-k");
    if (sp.d != 3) throw InvalidParameter("suite end-k runs at d = 3");
    Presentation p = family_presentation(sp);
    const int L = sp.max_len < 0 ? 9 : sp.max_len;
    SuiteReport rep;
    rep.parameters = {{"family", sp.family}, {"d", sp.d}, {"max_len", L}};
    rep.presentation_hash = p.hash();

    std::vector<StringWord> words = enumerate_strings(p, L);
    std::vector<int> end(words.size());
    parallel_for(words.size(), sp.jobs, [&](std::size_t i) { end[i] = end_dim(string_module(p, words[i])); });
    std::vector<std::string> hits;
    for (std::size_t i = 0; i < words.size(); ++i)
        if (end[i] == 1) hits.push_back(format_word(p, words[i]));
    auto shared_hits = std::make_shared<std::vector<std::string>>(hits);

    std::vector<Item> items;
    items.push_back({"end-k.set", "strings of length <= " + str(L) + " with End = k", [=](CheckRecord& r) {
                         std::vector<std::string> want = kEndKStrings, got = *shared_hits;
                         std::sort(want.begin(), want.end());
                         std::sort(got.begin(), got.end());
                         r.expected = join(want);
                         r.observed = join(got);
                         r.pass = want == got;
                     }});
    items.push_back({"end-k.trichotomy",
                     "each End = k string is S1, S2, uniserial of length 4, or in the component of S0",
                     [=](CheckRecord& r) {
                         ComponentIndex idx(p, L + 6);
                         const std::string c0 = idx.key(parse_word(p, "1_0"));
                         std::vector<std::string> in_c0, outside, stray;
                         for (const std::string& w : *shared_hits) {
                             StringWord s = parse_word(p, w);
                             Representation M = string_module(p, s);
                             bool uni4 = is_uniserial(M) && M.total_dim() == 4;
                             if (idx.key(s) == c0)
                                 in_c0.push_back(w);
                             else if (w == "1_1" || w == "1_2" || uni4)
                                 outside.push_back(w);
                             else
                                 stray.push_back(w);
                         }
                         r.expected = "none outside; S1, S2 and 4 uniserials off the S0 component";
                         r.observed = str(int(in_c0.size())) + " in the S0 component (" + join(in_c0) + "); off it: " +
                                      join(outside) + (stray.empty() ? "" : "; unexplained: " + join(stray));
                         r.pass = stray.empty() && outside.size() == 6;
                     }});
    items.push_back({"end-k.uniserial4", "exactly four uniserial modules of length 4 have End = k", [=](CheckRecord& r) {
                         std::vector<std::string> u;
                         for (const std::string& w : *shared_hits) {
                             Representation M = string_module(p, parse_word(p, w));
                             if (is_uniserial(M) && M.total_dim() == 4) u.push_back(w);
                         }
                         std::vector<std::string> want = kUniserial4;
                         std::sort(u.begin(), u.end());
                         std::sort(want.begin(), want.end());
                         r.expected = join(want);
                         r.observed = join(u);
                         r.pass = u == want;
                     }});
    execute(rep, items, sp.jobs);
    return rep;
}

SuiteReport suite_endo_s0(const SuiteParams& sp) {
    require_family(sp, "psl1", "endo-s0");
    Presentation p = family_presentation(sp);
    SuiteReport rep;
    rep.parameters = {{"family", sp.family}, {"d", sp.d}, {"n", json::array({1, 2, 3})}};
    rep.presentation_hash = p.hash();
    std::vector<Item> items;
    for (bool prime : {false, true})
        for (int l = 1; l <= 3; ++l)
            for (int n = 1; n <= 3; ++n) {
                std::string name = std::string(prime ? "A'" : "A") + "_{" + str(l) + "," + str(n) + "}";
                std::string id = std::string(prime ? "Aprime" : "A") + "." + str(l) + "." + str(n);
                items.push_back({id, name + ": stable End = k and Ext1 = 0", [=](CheckRecord& r) {
                                     StringWord w = parse_word(p, a_module_word(sp.d, l, n, prime));
                                     Representation M = string_module(p, w);
                                     int se = stable_end_dim(M), x = ext1_dim(M, M);
                                     r.expected = "stable End 1, Ext1 0";
                                     r.observed = "stable End " + str(se) + ", Ext1 " + str(x) + " (dim " +
                                                  str(M.total_dim()) + ")";
                                     r.pass = se == 1 && x == 0;
                                 }});
            }
    execute(rep, items, sp.jobs);
    return rep;
}

SuiteReport suite_s1_tube(const SuiteParams& sp) {
    require_family(sp, "psl1", "s1-tube");
    Presentation p = family_presentation(sp);
    SuiteReport rep;
    rep.parameters = {{"family", sp.family}, {"d", sp.d}, {"radius", sp.radius}};
    rep.presentation_hash = p.hash();
    std::vector<Item> items;
    for (int i : {1, 2}) {
        std::string S = "S" + str(i);
        items.push_back({S + ".component", "the component of " + S + " is a 3-tube", [=](CheckRecord& r) {
                             ComponentType t = component_type(p, StringWord::trivial_at(i), sp.radius);
                             r.expected = "tube(3)";
                             r.observed = t.text();
                             r.pass = r.observed == r.expected;
                         }});
        items.push_back({S + ".omega3", "Omega^3 " + S + " is isomorphic to " + S, [=](CheckRecord& r) {
                             Representation M = string_module(p, StringWord::trivial_at(i));
                             r.expected = "isomorphic";
                             r.pass = is_isomorphic(omega_power(M, 3), M);
                             r.observed = r.pass ? "isomorphic" : "not isomorphic";
                         }});
        items.push_back({S + ".omega2", "Omega^2 " + S + " is isomorphic to P" + str(i) + "/" + S, [=](CheckRecord& r) {
                             Representation M = string_module(p, StringWord::trivial_at(i));
                             Representation P = projective_module(p, i);
                             Representation Q = quotient(P, socle_space(P));
                             Representation O2 = omega_power(M, 2);
                             r.expected = series_text(radical_series(Q));
                             r.observed = series_text(radical_series(O2));
                             r.pass = is_isomorphic(O2, Q);
                         }});
    }
    int l = 0;
    for (const XModule& x : x_modules(sp.d)) {
        ++l;
        items.push_back({"X." + str(l) + ".1", "X_{" + str(l) + ",1}: the named endomorphism does not factor through a projective",
                         [=](CheckRecord& r) {
                             StringWord w = parse_word(p, x.word);
                             Representation M = string_module(p, w);
                             auto h = hom_from_descriptor(p, w, w, x.witness);
                             int se = stable_end_dim(M);
                             bool nf = h && !factors_through_projective(M, M, h->map);
                             r.expected = x.witness.text() + " nonfactoring, stable End >= 2";
                             r.observed = std::string(h ? (nf ? "nonfactoring" : "factors") : "not an endomorphism") +
                                          ", stable End " + str(se);
                             r.pass = nf && se >= 2;
                         }});
    }
    execute(rep, items, sp.jobs);
    return rep;
}

SuiteReport suite_uniserial(const SuiteParams& sp) {
    require_family(sp, "psl1", "uniserial");
    Presentation p = family_presentation(sp);
    SuiteReport rep;
    rep.parameters = {{"family", sp.family}, {"d", sp.d}};
    rep.presentation_hash = p.hash();
    const int N = 1 << (sp.d - 2);
    std::vector<Item> items;
    for (const std::string& w : kUniserial4) {
        std::string id = w;
        std::replace(id.begin(), id.end(), ' ', '_');
        items.push_back({"uniserial." + id + ".stable", w + ": stable End = k and Ext1 = k", [=](CheckRecord& r) {
                             Representation Y = string_module(p, parse_word(p, w));
                             int se = stable_end_dim(Y), x = ext1_dim(Y, Y);
                             r.expected = "stable End 1, Ext1 1";
                             r.observed = "stable End " + str(se) + ", Ext1 " + str(x);
                             r.pass = se == 1 && x == 1;
                         }});
        items.push_back({"uniserial." + id + ".udr", w + ": mod 2 deformation ring and its universal lift", [=](CheckRecord& r) {
                             Representation Y = string_module(p, parse_word(p, w));
                             UdrMod2Report u = uniserial_udr_report(Y);
                             // the lift is Y's radical series repeated N times, the truncation N - 1 times
                             std::vector<std::vector<int>> ys = radical_series(Y), us, ts;
                             for (int k = 0; k < N; ++k) {
                                 us.insert(us.end(), ys.begin(), ys.end());
                                 if (k) ts.insert(ts.end(), ys.begin(), ys.end());
                             }
                             std::string want = "k[t]/(t^" + str(N) + ")";
                             std::string lift = u.lift ? series_text(radical_series(*u.lift)) : "none";
                             std::string tr = u.truncated ? series_text(radical_series(*u.truncated)) : "none";
                             std::vector<std::string> failed;
                             for (const UdrCheck& c : u.checks)
                                 if (!c.passed) failed.push_back(c.name);
                             r.expected = want + ", lift " + series_text(us) + ", truncation " + series_text(ts);
                             r.observed = (u.verdict.empty() ? "no verdict" : u.verdict) + ", lift " + lift +
                                          ", truncation " + tr + (failed.empty() ? "" : "; failed: " + join(failed));
                             bool trunc_ok = N == 1 ? true : tr == series_text(ts);
                             r.pass = u.ok() && u.verdict == want && lift == series_text(us) && trunc_ok;
                         }});
    }
    execute(rep, items, sp.jobs);
    return rep;
}

SuiteReport suite_bands(const SuiteParams& sp) {
    Presentation p = family_presentation(sp);
    const int L = sp.max_len < 0 ? 12 : sp.max_len;
    SuiteReport rep;
    rep.parameters = {{"family", sp.family}, {"d", sp.d}, {"max_len", L}, {"field_ext", sp.field_ext}, {"m2_spot", 3}};
    rep.presentation_hash = p.hash();
    const Field F(sp.field_ext);
    std::vector<Band> bands = enumerate_bands(p, L);
    std::vector<Item> items;
    char buf[16];
    for (std::size_t b = 0; b < bands.size(); ++b) {
        std::snprintf(buf, sizeof buf, "%03zu", b);
        std::string text = format_band(p, bands[b]);
        items.push_back({std::string("band.") + buf, text + ", m = 1: stable End >= 2 for every lambda",
                         [=](CheckRecord& r) {
                             std::vector<std::string> dims;
                             bool ok = true;
                             for (Elem lam : F.units()) {
                                 int se = stable_end_dim(band_module(p, bands[b], lam, 1, F));
                                 dims.push_back(str(se));
                                 ok = ok && se >= 2;
                             }
                             r.expected = ">= 2 for lambda in " + F.name() + "*";
                             r.observed = join(dims, " ");
                             r.pass = ok;
                         }});
        if (b < 3)
            items.push_back({std::string("band.") + buf + ".m2", text + ", m = 2, lambda = 1: stable End >= 2",
                             [=](CheckRecord& r) {
                                 int se = stable_end_dim(band_module(p, bands[b], 1, 2, F));
                                 r.expected = ">= 2";
                                 r.observed = str(se);
                                 r.pass = se >= 2;
                             }});
    }
    items.push_back({"bands.count", "bands of length <= " + str(L) + " were enumerated", [n = bands.size()](CheckRecord& r) {
                         r.expected = "at least one band";
                         r.observed = str(int(n));
                         r.pass = n > 0;
                     }});
    execute(rep, items, sp.jobs);
    return rep;
}

// the psl1 proposition uses longer strings than the other two
int default_classify_len(const std::string& fam) { return fam == "psl1" ? 18 : 14; }

SuiteReport suite_classify(const SuiteParams& sp) {
    Presentation p = family_presentation(sp);
    ClassifyOptions opt;
    opt.max_len = sp.max_len < 0 ? default_classify_len(sp.family) : sp.max_len;
    opt.band_max_len = std::min(opt.max_len, 12);
    opt.field_ext = sp.field_ext;
    opt.radius = sp.radius;
    opt.jobs = sp.jobs;
    SuiteReport rep;
    rep.parameters = {{"family", sp.family},         {"d", sp.d},           {"max_len", opt.max_len},
                      {"band_max_len", opt.band_max_len}, {"field_ext", opt.field_ext}, {"radius", opt.radius}};
    rep.presentation_hash = p.hash();

    auto t = std::make_shared<ClassificationTable>(classify_stable_k(p, opt));
    auto m = std::make_shared<MembershipReport>(verify_membership(p, *t));
    std::vector<Item> items;
    for (const MembershipPart& part : m->parts) {
        items.push_back({"membership." + part.name,
                         "part (" + part.name + "): predicted strings have stable End = k and Ext1 = " +
                             str(part.expected_ext1),
                         [=](CheckRecord& r) {
                             std::vector<std::string> bad;
                             for (const std::string& f : m->failures)
                                 if (f.rfind("part " + part.name + ":", 0) == 0) bad.push_back(f);
                             r.expected = "seeds " + join(part.seeds) + "; every member a hit";
                             r.observed = str(int(part.members.size())) + " members" +
                                          (bad.empty() ? "" : "; " + join(bad, "; "));
                             r.pass = bad.empty() && !part.members.empty();
                         }});
    }
    items.push_back({"membership.placement", "every hit lies in a predicted component; component shapes agree",
                     [=](CheckRecord& r) {
                         std::vector<std::string> bad;
                         for (const std::string& f : m->failures)
                             if (f.rfind("part ", 0) != 0) bad.push_back(f);
                         r.expected = "no stray hits";
                         r.observed = str(m->hits) + " hits" + (bad.empty() ? "" : "; " + join(bad, "; "));
                         r.pass = bad.empty() && m->ok;
                     }});
    items.push_back({"table.bands", "no band module has stable End = k", [=](CheckRecord& r) {
                         int bands = 0, hits = 0;
                         for (const ClassRow& row : t->rows)
                             if (row.kind == "band") {
                                 ++bands;
                                 hits += row.hit;
                             }
                         r.expected = "0 hits";
                         r.observed = str(hits) + " hits among " + str(bands) + " band modules";
                         r.pass = hits == 0;
                     }});
    if (sp.family == "psl2")
        for (const char* s : {"be", "ka"})
            items.push_back({std::string("tube.") + s, std::string("M(") + s + ") is a boundary module of a 3-tube",
                             [=](CheckRecord& r) {
                                 StringWord w = parse_word(p, s);
                                 ComponentType ct = component_type(p, w, sp.radius);
                                 r.expected = "tube(3)";
                                 r.observed = ct.text();
                                 r.pass = ct.text() == "tube(3)";
                             }});
    if (sp.family == "a7") {
        items.push_back({"middle-term", "Y = M(be al- ga et) sits in a non-split 0 -> Y -> P1 + P2/soc -> Y -> 0",
                         [=](CheckRecord& r) {
                             Representation Y = string_module(p, parse_word(p, "be al- ga et"));
                             Representation P2 = projective_module(p, 2);
                             Representation X = direct_sum(projective_module(p, 1), quotient(P2, socle_space(P2)));
                             MiddleTermReport mt = middle_term_report(Y, X, sp.seed);
                             r.expected = "holds";
                             r.observed = std::string(mt.holds ? "holds" : "fails") + " (dim Hom(Y,X) " +
                                          str(mt.hom_dim) + ", " + mt.witness + ")";
                             r.pass = mt.holds;
                         }});
        items.push_back({"middle-term.ext1", "Ext1(Y, Y) = k for Y = M(be al- ga et)", [=](CheckRecord& r) {
                             Representation Y = string_module(p, parse_word(p, "be al- ga et"));
                             int x = ext1_dim(Y, Y);
                             r.expected = "1";
                             r.observed = str(x);
                             r.pass = x == 1;
                         }});
    }
    execute(rep, items, sp.jobs);
    return rep;
}

SuiteReport suite_witt(const SuiteParams& sp) {
    const int lo = 3;
    const int hi = sp.max_len < 0 ? 12 : sp.max_len;
    if (hi < lo) throw InvalidParameter("witt suite needs --max-len >= 3 (the largest d)");
    SuiteReport rep;
    rep.parameters = {{"d_min", lo}, {"d_max", hi}};
    std::vector<Item> items;
    char buf[8];
    for (int d = lo; d <= hi; ++d) {
        std::snprintf(buf, sizeof buf, "d%02d", d);
        const std::string D = buf;
        const int N = 1 << (d - 2);
        items.push_back({D + ".pd", "p_d: degree 2^(d-2) - 1, monic, lower coefficients even", [=](CheckRecord& r) {
                             IntPoly q = pd_poly(d);
                             bool even = true;
                             for (int k = 0; k < q.degree(); ++k) even = even && q.coeff(k) % 2 == 0;
                             r.expected = "degree " + str(N - 1) + ", monic, even";
                             r.observed = "degree " + str(q.degree()) + (q.coeff(q.degree()) == 1 ? ", monic" : ", not monic") +
                                          (even ? ", even" : ", odd coefficient");
                             r.pass = r.observed == r.expected;
                         }});
        items.push_back({D + ".pd_mod2", "p_d reduces to t^(2^(d-2) - 1) mod 2", [=](CheckRecord& r) {
                             r.expected = IntPoly::monomial(N - 1).text();
                             r.observed = pd_poly(d).mod2().text();
                             r.pass = r.expected == r.observed;
                         }});
        items.push_back({D + ".rho", "p_d(s + s^-1) = s T(s^2)", [=](CheckRecord& r) {
                             r.expected = "holds";
                             r.pass = verify_rho_identity(d);
                             r.observed = r.pass ? "holds" : "fails";
                         }});
        items.push_back({D + ".theta", "p_d(x)(x - 2) = 2[T(s^2) - s T(s^2)]", [=](CheckRecord& r) {
                             r.expected = "holds";
                             r.pass = verify_theta_identity(d);
                             r.observed = r.pass ? "holds" : "fails";
                         }});
        items.push_back({D + ".ranks", "ranks of the invariants, S' and Theta", [=](CheckRecord& r) {
                             std::vector<std::string> got;
                             bool cert = true;
                             for (LatticeKind k : {LatticeKind::FullInvariants, LatticeKind::Sprime, LatticeKind::Theta}) {
                                 LatticeReport lr = invariant_lattice_rank(d, k);
                                 got.push_back(str(lr.rank));
                                 cert = cert && lr.certificate_verified;
                             }
                             r.expected = join({str(N + 1), str(N - 1), str(N)});
                             r.observed = join(got) + (cert ? "" : " (certificate rejected)");
                             r.pass = r.observed == r.expected;
                         }});
        items.push_back({D + ".mod2_ring", "the ideal (p_d(t)(t - 2), 2 p_d(t)) mod 2", [=](CheckRecord& r) {
                             r.expected = "k[t]/(t^" + str(N) + ")";
                             r.observed = ring_mod2_presentation(d).descriptor;
                             r.pass = r.expected == r.observed;
                         }});
    }
    execute(rep, items, sp.jobs);
    return rep;
}

int string_dim(const StringWord& w) { return w.length() + 1; }

// intertwiners are solved over GF(2) and over GF(2^e); a field dependence shows up as a mismatch
std::string compare_pair(const Presentation& p, const StringWord& a, const StringWord& b, int e) {
    int k = hom_basis_string(p, a, b).dim();
    std::string bad;
    std::vector<int> exts = {1};
    if (e != 1) exts.push_back(e);
    for (int f : exts) {
        const Field F(f);
        int n = intertwiner_space(string_module(p, a, F), string_module(p, b, F)).dim();
        if (k != n)
            bad += (bad.empty() ? "" : "; ") + format_word(p, a) + " -> " + format_word(p, b) + ": " + str(k) + " vs " +
                   str(n) + " over GF(" + str(1 << f) + ")";
    }
    return bad;
}

SuiteReport suite_cross_oracle(const SuiteParams& sp) {
    Presentation p = family_presentation(sp);
    const bool exhaustive = sp.family == "psl1";
    const int bound = exhaustive ? 12 : 6;  // total dimension of an exhaustively compared pair
    const int sample_len = sp.max_len < 0 ? 10 : sp.max_len;
    const int samples = exhaustive ? 0 : 200;
    SuiteReport rep;
    rep.parameters = {{"family", sp.family}, {"d", sp.d},         {"exhaustive_total_dim", bound},
                      {"samples", samples},  {"sample_max_len", sample_len}, {"seed", sp.seed},
                      {"field_ext", sp.field_ext}};
    rep.presentation_hash = p.hash();

    auto words = std::make_shared<std::vector<StringWord>>(enumerate_strings(p, bound - 2));
    std::vector<Item> items;
    for (std::size_t i = 0; i < words->size(); ++i) {
        const StringWord a = (*words)[i];
        std::string label = format_word(p, a);
        char buf[16];
        std::snprintf(buf, sizeof buf, "%04zu", i);
        items.push_back({std::string("exhaustive.") + buf,
                         "Krause basis and intertwiners agree from " + label + " (total dim <= " + str(bound) + ")",
                         [=](CheckRecord& r) {
                             int pairs = 0;
                             std::vector<std::string> bad;
                             for (const StringWord& b : *words) {
                                 if (string_dim(a) + string_dim(b) > bound) continue;
                                 ++pairs;
                                 std::string e = compare_pair(p, a, b, sp.field_ext);
                                 if (!e.empty()) bad.push_back(e);
                             }
                             r.expected = "equal dimensions";
                             r.observed = str(pairs) + " pairs" + (bad.empty() ? " agree" : "; " + join(bad, "; "));
                             r.pass = bad.empty();
                         }});
    }
    if (samples > 0) {
        auto pool = std::make_shared<std::vector<StringWord>>(enumerate_strings(p, sample_len));
        std::mt19937_64 rng(sp.seed);
        std::vector<std::pair<std::size_t, std::size_t>> picks;
        for (int k = 0; k < samples; ++k) picks.push_back({rng() % pool->size(), rng() % pool->size()});
        const int chunk = 20;
        for (int c = 0; c * chunk < samples; ++c) {
            std::vector<std::pair<std::size_t, std::size_t>> mine(picks.begin() + c * chunk,
                                                                  picks.begin() + std::min(samples, (c + 1) * chunk));
            char buf[16];
            std::snprintf(buf, sizeof buf, "%03d", c);
            items.push_back({std::string("random.") + buf,
                             "Krause basis and intertwiners agree on seeded random pairs " + str(c * chunk) + ".." +
                                 str(c * chunk + int(mine.size()) - 1),
                             [=](CheckRecord& r) {
                                 std::vector<std::string> bad;
                                 for (auto [x, y] : mine) {
                                     std::string e = compare_pair(p, (*pool)[x], (*pool)[y], sp.field_ext);
                                     if (!e.empty()) bad.push_back(e);
                                 }
                                 r.expected = "equal dimensions";
                                 r.observed = str(int(mine.size())) + " pairs" + (bad.empty() ? " agree" : "; " + join(bad, "; "));
                                 r.pass = bad.empty();
                             }});
        }
    }
    execute(rep, items, sp.jobs);
    return rep;
}

struct SuiteDef {
    const char* name;
    const char* summary;
    SuiteReport (*fn)(const SuiteParams&);
};

const std::vector<SuiteDef>& suites() {
    static const std::vector<SuiteDef> s = {
        {"projectives", "radical series, relations and socles of the projective modules", suite_projectives},
        {"end-k", "psl1(3): strings with End = k and where they live", suite_end_k},
        {"endo-s0", "psl1: A and A' modules have stable End = k and Ext1 = 0", suite_endo_s0},
        {"s1-tube", "psl1: the 3-tubes of S1 and S2, and the X modules beside them", suite_s1_tube},
        {"uniserial", "psl1: uniserial modules of length 4 and their mod 2 deformation rings", suite_uniserial},
        {"bands", "band modules have stable End of dimension >= 2", suite_bands},
        {"classify", "stable End = k sweep and membership in the predicted components", suite_classify},
        {"witt", "integral identities and lattice ranks for d = 3..max-len", suite_witt},
        {"cross-oracle", "Krause homomorphism bases against intertwiner spaces", suite_cross_oracle},
    };
    return s;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> n;
    for (const SuiteDef& s : suites()) n.push_back(s.name);
    return n;
}

std::string suite_summary(const std::string& name) {
    for (const SuiteDef& s : suites())
        if (name == s.name) return s.summary;
    return "";
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
    for (const SuiteDef& s : suites())
        if (name == s.name) {
            auto t0 = Clock::now();
            SuiteReport r = s.fn(params);
            r.suite = name;
            r.jobs = params.jobs;
            r.runtime_ms = ms_since(t0);
            return r;
        }
    throw InvalidParameter("unknown suite '" + name + "' (" + join(suite_names()) + ")");
}

json to_json(const SuiteReport& r) {
    json o = normalized(r);
    for (std::size_t i = 0; i < r.checks.size(); ++i) o["checks"][i]["runtime_ms"] = r.checks[i].runtime_ms;
    o["execution"] = {{"jobs", r.jobs}, {"runtime_ms", r.runtime_ms}};
    return o;
}

json normalized(const SuiteReport& r) {
    json checks = json::array();
    for (const CheckRecord& c : r.checks)
        checks.push_back({{"id", c.id},
                          {"description", c.description},
                          {"expected", c.expected},
                          {"observed", c.observed},
                          {"verdict", c.pass ? "pass" : "fail"}});
    return {{"schema", "biserial-suite-report"},
            {"schema_version", 1},
            {"suite", r.suite},
            {"parameters", r.parameters},
            {"checks", checks},
            {"verdict", r.pass() ? "pass" : "fail"},
            {"toolkit_version", toolkit_version()},
            {"presentation_hash", r.presentation_hash}};
}

namespace {

std::string md_cell(std::string s) {
    std::string o;
    for (char c : s) o += c == '|' ? std::string("\\|") : std::string(1, c);
    return o;
}

}  // namespace

std::string to_markdown(const SuiteReport& r) {
    std::ostringstream os;
    os << "# suite " << r.suite << "\n\n";
    os << "parameters: `" << r.parameters.dump() << "`\n\n";
    os << "| id | verdict | expected | observed |\n|---|---|---|---|\n";
    for (const CheckRecord& c : r.checks)
        os << "| " << c.id << " | " << (c.pass ? "pass" : "FAIL") << " | " << md_cell(c.expected) << " | "
           << md_cell(c.observed) << " |\n";
    os << "\noverall: **" << (r.pass() ? "pass" : "fail") << "**\n";
    return os.str();
}

std::string to_text(const SuiteReport& r) {
    std::ostringstream os;
    for (const CheckRecord& c : r.checks)
        os << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.observed
           << (c.pass ? "" : "  (expected " + c.expected + ")") << "\n";
    int np = int(std::count_if(r.checks.begin(), r.checks.end(), [](const CheckRecord& c) { return c.pass; }));
    os << "suite " << r.suite << ": " << (r.pass() ? "pass" : "fail") << " (" << np << "/" << r.checks.size()
       << " checks)\n";
    return os.str();
}

// -------------------------------------------------------------------- CLI

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Opts {
    std::string family = "psl1";
    int d = 3;
    int max_len = -1;
    int field_ext = 2;
    int radius = 6;
    std::string format = "text";
    std::string out;
    int jobs = 1;
    std::uint64_t seed = 20240601;
    bool normalize = false;
};

Presentation cli_presentation(const Opts& o) {
    if (o.d < 3) throw Usage("--d must be at least 3");
    if (o.family == "a7" && o.d != 3) throw Usage("a7 only exists for d = 3");
    return build_family(o.family, o.d);
}

SuiteParams to_params(const Opts& o) {
    SuiteParams sp;
    sp.family = o.family;
    sp.d = o.d;
    sp.max_len = o.max_len;
    sp.field_ext = o.field_ext;
    sp.radius = o.radius;
    sp.jobs = std::max(1, o.jobs);
    sp.seed = o.seed;
    return sp;
}

void emit(const Opts& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw Usage("cannot write " + o.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
}

std::string render(const Opts& o, const json& j, const std::string& text, const std::string& md) {
    if (o.format == "json") return j.dump(2);
    if (o.format == "md") return md;
    return text;
}

std::string dims_text(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + str(v[i]);
    return s + ")";
}

// ---- algebra
int cmd_algebra(const Opts& o, std::ostream& out) {
    Presentation p = cli_presentation(o);
    ValidationReport v = validate(p);
    json j = {{"presentation", p.to_json()}, {"hash", p.hash()}, {"validation", to_json(v)}};
    std::ostringstream t, md;
    t << "family " << o.family << " d=" << o.d << " hash " << p.hash() << "\n";
    md << "# " << o.family << " d=" << o.d << "\n\n| vertex | dim | radical series |\n|---|---|---|\n";
    json pj = json::array();
    for (int u = 0; u < p.num_vertices(); ++u) {
        Representation P = projective_module(p, u);
        std::string s = series_text(radical_series(P));
        pj.push_back({{"vertex", u}, {"dimension", P.total_dim()}, {"radical_series", s},
                      {"arms", [&] {
                           json a = json::array();
                           for (const Path& arm : p.projective_shape(u).arms) a.push_back(p.path_text(arm));
                           return a;
                       }()}});
        t << "P" << u << " dim " << P.total_dim() << " " << s << "\n";
        md << "| " << u << " | " << P.total_dim() << " | " << s << " |\n";
    }
    j["projectives"] = pj;
    for (const ValidationCheck& c : v.checks)
        t << (c.passed ? "ok   " : "FAIL ") << c.name << (c.passed ? "" : ": " + c.witness) << "\n";
    md << "\nvalidation: " << (v.ok() ? "ok" : "failed") << "\n";
    emit(o, render(o, j, t.str(), md.str()), out);
    return v.ok() ? 0 : 1;
}

// ---- strings
int cmd_strings(const Opts& o, const std::string& word, bool bands, std::ostream& out) {
    Presentation p = cli_presentation(o);
    const int L = o.max_len < 0 ? 4 : o.max_len;
    if (!word.empty()) {
        StringWord w = parse_word(p, word);
        bool valid = is_valid_string(p, w);
        json j = {{"word", word}, {"valid", valid}};
        std::ostringstream t;
        t << word << ": " << (valid ? "valid" : "not a string") << "\n";
        if (valid) {
            StringWord c = canonical_string(p, w);
            j["canonical"] = format_word(p, c);
            j["dimension"] = w.length() + 1;
            j["projective"] = is_projective_string(p, w);
            j["starts_on_peak"] = starts_on_peak(p, w);
            j["starts_in_deep"] = starts_in_deep(p, w);
            j["ends_on_peak"] = ends_on_peak(p, w);
            j["ends_in_deep"] = ends_in_deep(p, w);
            t << "canonical " << format_word(p, c) << "\n";
            for (Side s : {Side::Left, Side::Right}) {
                std::string side = side_name(s);
                // a hook cannot be added on a peak, nor a cohook in a deep
                auto attempt = [&](auto f) -> std::optional<std::string> {
                    try {
                        return format_word(p, f());
                    } catch (const PeakDeepViolation&) {
                        return std::nullopt;
                    }
                };
                auto h = attempt([&] { return add_hook(p, w, s); });
                auto ch = attempt([&] { return add_cohook(p, w, s); });
                auto rh = remove_hook(p, w, s), rc = remove_cohook(p, w, s);
                auto opt = [](const std::optional<std::string>& x) { return x ? json(*x) : json(nullptr); };
                j["hooks"][side] = {{"add_hook", opt(h)},
                                    {"add_cohook", opt(ch)},
                                    {"remove_hook", rh ? json(format_word(p, *rh)) : json(nullptr)},
                                    {"remove_cohook", rc ? json(format_word(p, *rc)) : json(nullptr)}};
                t << side << ": add hook " << h.value_or("none") << ", add cohook " << ch.value_or("none") << "\n";
            }
            if (!is_projective_string(p, w)) {
                ArNeighbors nb = ar_neighbors(p, w);
                auto f = [&](const std::optional<StringWord>& s) { return s ? json(format_word(p, *s)) : json(nullptr); };
                j["ar_neighbors"] = {{"right_h", f(nb.right_h)}, {"left_h", f(nb.left_h)},
                                     {"right_c", f(nb.right_c)}, {"left_c", f(nb.left_c)}};
                for (const StringWord& s : nb.successors()) t << "irreducible map to " << format_word(p, s) << "\n";
                for (const StringWord& s : nb.predecessors()) t << "irreducible map from " << format_word(p, s) << "\n";
                if (auto ts = tau_string(p, w)) {
                    j["tau"] = format_word(p, ts->word);
                    t << "tau " << format_word(p, ts->word) << "\n";
                }
            }
        }
        emit(o, render(o, j, t.str(), "```\n" + t.str() + "```\n"), out);
        return valid ? 0 : 1;
    }
    json list = json::array();
    std::ostringstream t, md;
    md << "| " << (bands ? "band" : "string") << " | length |\n|---|---|\n";
    if (bands) {
        for (const Band& b : enumerate_bands(p, L)) {
            list.push_back({{"band", format_band(p, b)}, {"length", b.length()}});
            t << format_band(p, b) << "\n";
            md << "| " << format_band(p, b) << " | " << b.length() << " |\n";
        }
    } else {
        for (const StringWord& w : enumerate_strings(p, L)) {
            list.push_back({{"string", format_word(p, w)}, {"length", w.length()}});
            t << format_word(p, w) << "\n";
            md << "| " << format_word(p, w) << " | " << w.length() << " |\n";
        }
    }
    json j = {{"family", o.family}, {"d", o.d}, {"max_len", L}, {bands ? "bands" : "strings", list}};
    emit(o, render(o, j, t.str(), md.str()), out);
    return 0;
}

struct ModuleSpec {
    std::string word, band;
    int lambda = 1, m = 1, projective = -1;
};

Representation build_module(const Presentation& p, const Opts& o, const ModuleSpec& s) {
    int given = !s.word.empty() + !s.band.empty() + (s.projective >= 0);
    if (given != 1) throw Usage("give exactly one of --word, --band, --projective");
    if (!s.word.empty()) return string_module(p, parse_word(p, s.word));
    if (s.projective >= 0) {
        if (s.projective >= p.num_vertices()) throw Usage("--projective must be a vertex");
        return projective_module(p, s.projective);
    }
    Field F(o.field_ext);
    if (s.lambda <= 0 || s.lambda >= F.order()) throw Usage("--lambda must be a nonzero element of " + F.name());
    if (s.m < 1) throw Usage("--m must be positive");
    return band_module(p, parse_band(p, s.band), Elem(s.lambda), s.m, F);
}

// ---- module
int cmd_module(const Opts& o, const ModuleSpec& s, std::ostream& out) {
    Presentation p = cli_presentation(o);
    Representation M = build_module(p, o, s);
    const bool proj = is_projective(M);
    json j = {{"module", to_json(M)},
              {"dimension_vector", dimension_vector(M)},
              {"radical_series", series_text(radical_series(M))},
              {"uniserial", is_uniserial(M)},
              {"projective", proj},
              {"end_dim", end_dim(M)}};
    std::ostringstream t;
    t << "dimension vector " << dims_text(dimension_vector(M)) << "\n";
    t << "radical series " << series_text(radical_series(M)) << "\n";
    t << "dim End " << end_dim(M) << (proj ? ", projective\n" : "\n");
    if (!proj) {
        int se = stable_end_dim(M), x = ext1_dim(M, M);
        j["stable_end_dim"] = se;
        j["ext1_dim"] = x;
        t << "dim stable End " << se << ", dim Ext1 " << x << "\n";
        Representation O = omega(M);
        j["omega"] = {{"dimension_vector", dimension_vector(O)}, {"radical_series", series_text(radical_series(O))}};
        if (auto w = identify_string(O)) j["omega"]["string"] = format_word(p, *w);
        t << "Omega: " << series_text(radical_series(O)) << "\n";
    }
    emit(o, render(o, j, t.str(), "```\n" + t.str() + "```\n"), out);
    return 0;
}

// ---- hom
int cmd_hom(const Opts& o, const std::string& src, const std::string& dst, std::ostream& out) {
    if (src.empty() || dst.empty()) throw Usage("hom needs --source and --target strings");
    Presentation p = cli_presentation(o);
    StringWord a = parse_word(p, src), b = parse_word(p, dst);
    Representation M = string_module(p, a), N = string_module(p, b);
    HomSpace H = hom_basis_string(p, a, b);
    int inter = intertwiner_space(M, N).dim();
    int st = stable_hom_dim(M, N), x = ext1_dim(M, N);
    json j = {{"source", src},        {"target", dst},      {"hom_dim", H.dim()}, {"intertwiner_dim", inter},
              {"stable_hom_dim", st}, {"ext1_dim", x},      {"basis", to_json(p, H)}};
    std::ostringstream t;
    t << "dim Hom " << H.dim() << " (intertwiners " << inter << "), stable " << st << ", Ext1 " << x << "\n";
    for (const HomElement& e : H.basis)
        if (e.descriptor) t << "  " << e.descriptor->text() << "\n";
    emit(o, render(o, j, t.str(), "```\n" + t.str() + "```\n"), out);
    return H.dim() == inter ? 0 : 1;
}

// ---- classify
int cmd_classify(const Opts& o, const std::string& graph_path, int band_len, std::ostream& out) {
    Presentation p = cli_presentation(o);
    ClassifyOptions opt;
    opt.max_len = o.max_len < 0 ? default_classify_len(o.family) : o.max_len;
    opt.band_max_len = band_len >= 0 ? band_len : std::min(opt.max_len, 12);
    opt.field_ext = o.field_ext;
    opt.radius = o.radius;
    opt.jobs = std::max(1, o.jobs);
    ClassificationTable t = classify_stable_k(p, opt);
    MembershipReport m = verify_membership(p, t);
    json j = to_json(t);
    j["membership"] = to_json(m);
    std::ostringstream tx;
    for (const ClassRow& r : t.rows)
        if (r.hit)
            tx << r.word << "  ext1 " << r.ext1_dim << "  " << r.component << "  " << r.component_type << "\n";
    tx << "hits " << m.hits << ", membership " << (m.ok ? "ok" : "FAILED") << "\n";
    for (const std::string& f : m.failures) tx << "  " << f << "\n";
    std::string md = to_markdown(t) + "\nmembership: " + (m.ok ? "ok" : "failed") + "\n";
    emit(o, render(o, j, tx.str(), md), out);
    if (!graph_path.empty()) {
        const bool adj = graph_path.size() > 4 && graph_path.substr(graph_path.size() - 4) == ".adj";
        json g = {{"family", o.family}, {"d", o.d}, {"radius", opt.radius}, {"components", json::array()}};
        std::string text;
        for (const ComponentSummary& c : t.components) {
            ComponentView v = component_view(p, parse_word(p, c.key), opt.radius);
            g["components"].push_back({{"key", c.key}, {"type", c.type}, {"graph", to_json(p, v)}});
            text += "# component " + c.key + " " + c.type + "\n" + adjacency_list(p, v);
        }
        std::ofstream f(graph_path);
        if (!f) throw Usage("cannot write " + graph_path);
        f << (adj ? text : g.dump(2) + "\n");
    }
    return m.ok ? 0 : 1;
}

// ---- udr
int cmd_udr(const Opts& o, const ModuleSpec& s, std::ostream& out) {
    Presentation p = cli_presentation(o);
    Representation Y = build_module(p, o, s);
    UdrMod2Report r = uniserial_udr_report(Y);
    std::ostringstream t;
    for (const UdrCheck& c : r.checks) t << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    t << "verdict: " << (r.verdict.empty() ? "none" : r.verdict) << "\n";
    emit(o, render(o, to_json(r), t.str(), "```\n" + t.str() + "```\n"), out);
    return r.ok() ? 0 : 1;
}

// ---- witt
int cmd_witt(const Opts& o, std::ostream& out) {
    if (o.d < 3) throw Usage("--d must be at least 3");
    if (o.d > 14) throw Usage("--d is limited to 14 here; use the library for larger d");
    json j = witt_report(o.d);
    bool ok = j["rho"]["holds"].get<bool>() && j["theta"]["holds"].get<bool>();
    const int N = 1 << (o.d - 2);
    std::vector<int> want = {N + 1, N - 1, N};
    std::ostringstream t;
    IntPoly pd = pd_poly(o.d);
    t << "p_" << o.d << "(t) = " << (o.d <= 6 ? pd.text() : "degree " + str(pd.degree())) << "\n";
    t << "p_" << o.d << "(t) mod 2 = " << pd.mod2().text() << "\n";
    t << "rho identity: " << (j["rho"]["holds"].get<bool>() ? "holds" : "FAILS") << "\n";
    t << "theta identity: " << (j["theta"]["holds"].get<bool>() ? "holds" : "FAILS") << "\n";
    for (int k = 0; k < 3; ++k) {
        const json& l = j["lattices"][k];
        bool rk = l["rank"].get<int>() == want[k];
        ok = ok && rk && l["certificate_verified"].get<bool>();
        t << "rank " << l["lattice"].get<std::string>() << " = " << l["rank"].get<int>() << (rk ? "" : " (unexpected)") << "\n";
    }
    t << "mod 2: " << j["ring_mod2"]["descriptor"].get<std::string>() << "\n";
    emit(o, render(o, j, t.str(), "```\n" + t.str() + "```\n"), out);
    return ok ? 0 : 1;
}

// ---- suite
int cmd_suite(const Opts& o, const std::string& name, std::ostream& out) {
    if (name == "list") {
        std::ostringstream t;
        for (const std::string& n : suite_names()) t << n << "  " << suite_summary(n) << "\n";
        emit(o, t.str(), out);
        return 0;
    }
    if (suite_summary(name).empty()) throw Usage("unknown suite '" + name + "' (" + join(suite_names()) + ")");
    if (o.family == "a7" && o.d != 3) throw Usage("a7 only exists for d = 3");
    SuiteReport r = run_suite(name, to_params(o));
    emit(o, render(o, o.normalize ? normalized(r) : to_json(r), to_text(r), to_markdown(r)), out);
    return r.pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::string* out_s, std::string* err_s) {
    std::ostringstream obuf, ebuf;
    std::ostream& out = out_s ? static_cast<std::ostream&>(obuf) : std::cout;
    std::ostream& err = err_s ? static_cast<std::ostream&>(ebuf) : std::cerr;
    auto finish = [&](int code) {
        if (out_s) *out_s = obuf.str();
        if (err_s) *err_s = ebuf.str();
        return code;
    };

    CLI::App app{"Computations with the special biserial algebras of dihedral blocks", "biserial"};
    app.require_subcommand(1);
    app.fallthrough();
    Opts o;
    app.add_option("--family", o.family, "psl1, psl2 or a7")->check(CLI::IsMember({"psl1", "psl2", "a7"}));
    app.add_option("--d", o.d, "2^d is the order of the defect group");
    app.add_option("--max-len", o.max_len, "string length bound (witt suite: largest d)");
    app.add_option("--field-ext", o.field_ext, "bands are taken over GF(2^field-ext)")->check(CLI::Range(1, 8));
    app.add_option("--radius", o.radius, "AR component walk radius")->check(CLI::Range(1, 64));
    app.add_option("--format", o.format, "json, md or text")->check(CLI::IsMember({"json", "md", "text"}));
    app.add_option("--out", o.out, "write the report here instead of stdout");
    app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--seed", o.seed, "seed for randomized sampling");
    app.add_flag("--normalize", o.normalize, "suite JSON without timings or worker counts");

    ModuleSpec ms;
    std::string word, source, target, graph, suite;
    bool bands = false;
    int band_len = -1;

    auto* c_alg = app.add_subcommand("algebra", "build, validate and show the projectives");
    auto* c_str = app.add_subcommand("strings", "enumerate strings or bands, or inspect one string");
    c_str->add_option("--word", word, "string to inspect, e.g. \"be- de- et-\"");
    c_str->add_flag("--bands", bands, "enumerate bands instead of strings");
    auto module_opts = [&](CLI::App* c) {
        c->add_option("--word", ms.word, "string module");
        c->add_option("--band", ms.band, "band module");
        c->add_option("--lambda", ms.lambda, "band parameter, an element index of GF(2^field-ext)");
        c->add_option("--m", ms.m, "band multiplicity");
        c->add_option("--projective", ms.projective, "projective indecomposable P(u)");
    };
    auto* c_mod = app.add_subcommand("module", "construct a module and report its invariants");
    module_opts(c_mod);
    auto* c_hom = app.add_subcommand("hom", "Hom, stable Hom and Ext1 between string modules");
    c_hom->add_option("--source", source, "source string")->required();
    c_hom->add_option("--target", target, "target string")->required();
    auto* c_cls = app.add_subcommand("classify", "stable End = k sweep over strings and bands");
    c_cls->add_option("--emit-graph", graph, "write AR component graphs (node-link JSON, or adjacency lists for *.adj)");
    c_cls->add_option("--band-max-len", band_len, "band length bound (default min(max-len, 12))");
    auto* c_udr = app.add_subcommand("udr", "mod 2 deformation ring checks for a uniserial module");
    module_opts(c_udr);
    auto* c_witt = app.add_subcommand("witt", "polynomial and group ring identities for one d");
    auto* c_suite = app.add_subcommand("suite", "run a named verification suite ('suite list' shows them)");
    c_suite->add_option("name", suite, "suite name")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return finish(0);
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return finish(0);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << "run with --help for the list of subcommands\n";
        return finish(2);
    }

    try {
        if (c_alg->parsed()) return finish(cmd_algebra(o, out));
        if (c_str->parsed()) return finish(cmd_strings(o, word, bands, out));
        if (c_mod->parsed()) return finish(cmd_module(o, ms, out));
        if (c_hom->parsed()) return finish(cmd_hom(o, source, target, out));
        if (c_cls->parsed()) return finish(cmd_classify(o, graph, band_len, out));
        if (c_udr->parsed()) return finish(cmd_udr(o, ms, out));
        if (c_witt->parsed()) return finish(cmd_witt(o, out));
        if (c_suite->parsed()) return finish(cmd_suite(o, suite, out));
    } catch (const Usage& e) {
        err << "usage error: " << e.what() << "\n";
        return finish(2);
    } catch (const HypothesisFailed& e) {
        err << e.what() << "\n";
        return finish(1);
    } catch (const NotUniserial& e) {
        err << "usage error: " << e.what() << "\n";
        return finish(2);
    } catch (const Error& e) {
        // bad words, arrows, bands or parameters
        err << "usage error: " << e.what() << "\n";
        return finish(2);
    }
    err << "usage error: no subcommand\n";
    return finish(2);
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args);
}

}  // namespace biserial
