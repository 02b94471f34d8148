#include "biserial/arquiver.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "biserial/errors.hpp"
#include "biserial/parallel.hpp"

namespace biserial {

using nlohmann::json;

namespace {

struct StableData {
    Presentation q;
    std::vector<StringWord> projective_words;  // uniserial projectives of Lambda
    std::set<std::string> top_projective;      // strings of P(u)/soc P(u)
    std::set<std::string> top_injective;       // strings of rad P(u)
};

std::string key_of(const Presentation& p, const StringWord& w) { return format_word(p, canonical_string(p, w)); }

const StableData& stable_data(const Presentation& p) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<StableData>> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(p.hash());
        if (it != cache.end()) return *it->second;
    }
    std::vector<Path> sf = p.string_forbidden();
    std::vector<StringWord> proj;
    for (int u = 0; u < p.num_vertices(); ++u) {
        const ProjectiveShape& sh = p.projective_shape(u);
        if (!sh.uniserial() || sh.arms[0].empty()) continue;
        if (std::find(sf.begin(), sf.end(), sh.arms[0]) == sf.end()) sf.push_back(sh.arms[0]);
        StringWord w;
        for (auto it = sh.arms[0].rbegin(); it != sh.arms[0].rend(); ++it) w.letters.push_back({*it, false});
        proj.push_back(canonical_string(p, w));
    }
    auto d = std::make_shared<StableData>(StableData{p.with_string_forbidden(sf), proj, {}, {}});
    for (int u = 0; u < p.num_vertices(); ++u) {
        Representation P = projective_module(p, u);
        Subspace soc = socle_space(P);
        Representation top_part = quotient(P, soc);
        if (auto w = identify_string(top_part)) d->top_projective.insert(format_word(p, *w));
        Representation rad = submodule(P, radical(P));
        if (auto w = identify_string(rad)) d->top_injective.insert(format_word(p, *w));
    }
    std::lock_guard<std::mutex> lk(mu);
    auto [it, fresh] = cache.emplace(p.hash(), d);
    (void)fresh;
    return *it->second;
}

// S_h', _h'S, S_c', _c'S in the stable string algebra q
std::optional<StringWord> right_h(const Presentation& q, const StringWord& s) {
    if (!starts_on_peak(q, s)) return add_hook(q, s, Side::Right);
    return remove_cohook(q, s, Side::Right);
}
std::optional<StringWord> left_h(const Presentation& q, const StringWord& s) {
    if (!ends_on_peak(q, s)) return add_hook(q, s, Side::Left);
    return remove_cohook(q, s, Side::Left);
}
std::optional<StringWord> right_c(const Presentation& q, const StringWord& s) {
    if (!starts_in_deep(q, s)) return add_cohook(q, s, Side::Right);
    return remove_hook(q, s, Side::Right);
}
std::optional<StringWord> left_c(const Presentation& q, const StringWord& s) {
    if (!ends_in_deep(q, s)) return add_cohook(q, s, Side::Left);
    return remove_hook(q, s, Side::Left);
}

void check_center(const Presentation& p, const Presentation& q, const StringWord& s) {
    if (is_valid_string(q, s)) return;
    if (is_valid_string(p, s)) throw ProjectiveCenter("M(" + format_word(p, s) + ") is projective");
    throw InvalidString("'" + format_word(p, s) + "' is not a string");
}

}  // namespace

Presentation stable_string_presentation(const Presentation& p) { return stable_data(p).q; }

bool is_projective_string(const Presentation& p, const StringWord& s) {
    if (!is_valid_string(p, s)) return false;
    StringWord c = canonical_string(p, s);
    for (const StringWord& w : stable_data(p).projective_words)
        if (w == c) return true;
    return false;
}

std::vector<StringWord> ArNeighbors::successors() const {
    std::vector<StringWord> out;
    for (const auto* o : {&right_h, &left_h})
        if (*o) out.push_back(**o);
    return out;
}

std::vector<StringWord> ArNeighbors::predecessors() const {
    std::vector<StringWord> out;
    for (const auto* o : {&right_c, &left_c})
        if (*o) out.push_back(**o);
    return out;
}

ArNeighbors ar_neighbors(const Presentation& p, const StringWord& s) {
    const Presentation& q = stable_data(p).q;
    check_center(p, q, s);
    ArNeighbors n;
    n.center = s;
    n.right_h = right_h(q, s);
    n.left_h = left_h(q, s);
    n.right_c = right_c(q, s);
    n.left_c = left_c(q, s);
    if (!n.right_h) n.absent.push_back("right_h");
    if (!n.left_h) n.absent.push_back("left_h");
    if (!n.right_c) n.absent.push_back("right_c");
    if (!n.left_c) n.absent.push_back("left_c");
    return n;
}

std::optional<TauStep> tau_string(const Presentation& p, const StringWord& s, int dir) {
    const StableData& sd = stable_data(p);
    check_center(p, sd.q, s);
    const std::string k = key_of(p, s);
    // the hook formula needs an almost split sequence of the string algebra on
    // that side, which its projectives (resp. injectives) do not have
    bool edge = dir > 0 ? sd.top_projective.count(k) > 0 : sd.top_injective.count(k) > 0;
    if (!edge) {
        auto r = dir > 0 ? right_c(sd.q, s) : right_h(sd.q, s);
        if (r) {
            auto t = dir > 0 ? left_c(sd.q, *r) : left_h(sd.q, *r);
            if (t && is_valid_string(sd.q, *t)) return TauStep{canonical_string(p, *t), true};
        }
    }
    Representation N = omega_power(string_module(p, s), 2 * dir);
    if (N.is_zero()) return std::nullopt;
    auto w = identify_string(N);
    if (!w) return std::nullopt;
    return TauStep{*w, false};
}

std::optional<StringWord> omega_word(const Presentation& p, const StringWord& s, int k) {
    Representation N = omega_power(string_module(p, s), k);
    if (N.is_zero()) return std::nullopt;
    return identify_string(N);
}

std::string ComponentType::text() const {
    switch (kind) {
        case Kind::Tube: return "tube(" + std::to_string(rank) + ")";
        case Kind::ZAEvidence: return "ZA-inf-inf-evidence(" + std::to_string(bound) + ")";
        default: return "unknown";
    }
}

ComponentType component_type(const Presentation& p, const StringWord& s, int radius) {
    if (radius < 1) throw InvalidParameter("radius must be >= 1");
    check_center(p, stable_data(p).q, s);
    ComponentType ct;
    ct.bound = radius;
    const StringWord start = canonical_string(p, s);
    StringWord cur = start;
    ct.orbit_lengths.push_back(cur.length());
    for (int k = 1; k <= radius; ++k) {
        auto t = tau_string(p, cur);
        if (!t) return ct;
        cur = t->word;
        ct.orbit_lengths.push_back(cur.length());
        if (cur == start) {
            ct.kind = ComponentType::Kind::Tube;
            ct.rank = k;
            return ct;
        }
    }
    // no period; call it evidence only if the orbit is growing
    if (ct.orbit_lengths.back() > ct.orbit_lengths.front()) ct.kind = ComponentType::Kind::ZAEvidence;
    return ct;
}

ComponentView component_view(const Presentation& p, const StringWord& s, int radius) {
    ComponentView v;
    v.center = canonical_string(p, s);
    v.radius = radius;
    v.type = component_type(p, s, radius);
    std::map<std::string, int> id;
    std::vector<int> depth;
    auto node = [&](const StringWord& w, int dep) {
        StringWord c = canonical_string(p, w);
        std::string k = format_word(p, c);
        auto it = id.find(k);
        if (it != id.end()) return it->second;
        int i = int(v.nodes.size());
        id[k] = i;
        v.nodes.push_back(c);
        depth.push_back(dep);
        return i;
    };
    node(v.center, 0);
    std::set<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < v.nodes.size(); ++i) {
        if (depth[i] >= radius) continue;
        ArNeighbors n = ar_neighbors(p, v.nodes[i]);
        for (const StringWord& w : n.successors()) edges.insert({int(i), node(w, depth[i] + 1)});
        for (const StringWord& w : n.predecessors()) edges.insert({node(w, depth[i] + 1), int(i)});
    }
    v.edges.assign(edges.begin(), edges.end());
    return v;
}

json to_json(const Presentation& p, const ComponentView& v) {
    json nodes = json::array(), links = json::array();
    for (std::size_t i = 0; i < v.nodes.size(); ++i)
        nodes.push_back({{"id", int(i)}, {"string", format_word(p, v.nodes[i])}, {"length", v.nodes[i].length()}});
    for (auto [a, b] : v.edges) links.push_back({{"source", a}, {"target", b}});
    return {{"directed", true},
            {"multigraph", false},
            {"graph",
             {{"center", format_word(p, v.center)}, {"radius", v.radius}, {"classification", v.type.text()}}},
            {"nodes", nodes},
            {"links", links}};
}

std::string adjacency_list(const Presentation& p, const ComponentView& v) {
    std::ostringstream os;
    os << "# center " << format_word(p, v.center) << ", radius " << v.radius << ", " << v.type.text() << "\n";
    for (std::size_t i = 0; i < v.nodes.size(); ++i) os << "# " << i << ": " << format_word(p, v.nodes[i]) << "\n";
    std::vector<std::vector<int>> out(v.nodes.size());
    for (auto [a, b] : v.edges) out[a].push_back(b);
    for (std::size_t i = 0; i < out.size(); ++i) {
        os << i;
        for (int b : out[i]) os << " " << b;
        os << "\n";
    }
    return os.str();
}

std::vector<StringWord> omega_orbit(const Presentation& p, const StringWord& s, int max_len, int max_steps) {
    const StringWord start = canonical_string(p, s);
    std::vector<StringWord> orbit{start};
    const Representation M = string_module(p, start);
    for (int dir : {1, -1}) {
        Representation X = M;
        int outside = 0;
        for (int j = 1; j <= max_steps; ++j) {
            X = dir > 0 ? omega(X) : omega_inverse(X);
            if (X.is_zero()) break;
            if (X.total_dim() > max_len + 1) {
                if (++outside >= 3) break;
                continue;
            }
            outside = 0;
            auto w = identify_string(X);
            if (!w || *w == start) break;
            orbit.push_back(*w);
        }
    }
    std::sort(orbit.begin(), orbit.end(), word_less);
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

// ---------------------------------------------------------------- components

ComponentIndex::ComponentIndex(const Presentation& p, int cap) : p_(p) {
    const StableData& sd = stable_data(p);
    for (StringWord& w : enumerate_strings(p, cap))
        if (is_valid_string(sd.q, w)) words_.push_back(std::move(w));
    parent_.resize(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) parent_[i] = int(i);
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // the smaller index (shorter word) becomes the root
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    };
    for (std::size_t i = 0; i < words_.size(); ++i) {
        ArNeighbors n = ar_neighbors(p, words_[i]);
        for (const auto* o : {&n.right_h, &n.left_h, &n.right_c, &n.left_c}) {
            if (!*o || (*o)->length() > cap) continue;
            int j = index(**o);
            if (j >= 0) unite(int(i), j);
        }
    }
    keys_.resize(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) keys_[i] = format_word(p, words_[find(int(i))]);
}

int ComponentIndex::find(int i) const {
    while (parent_[i] != i) i = parent_[i];
    return i;
}

int ComponentIndex::index(const StringWord& s) const {
    StringWord c = canonical_string(p_, s);
    auto it = std::lower_bound(words_.begin(), words_.end(), c, word_less);
    if (it == words_.end() || !(*it == c)) return -1;
    return int(it - words_.begin());
}

std::string ComponentIndex::key(const StringWord& s) const {
    if (!is_valid_string(p_, s)) return {};
    int i = index(s);
    if (i < 0) return {};
    return keys_.empty() ? format_word(p_, words_[find(i)]) : keys_[i];
}

std::vector<StringWord> ComponentIndex::members(const std::string& key) const {
    std::vector<StringWord> out;
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (keys_[i] == key) out.push_back(words_[i]);
    return out;
}

// ------------------------------------------------------------ classification

ClassificationTable classify_stable_k(const Presentation& p, const ClassifyOptions& opt) {
    if (opt.max_len < 1) throw InvalidParameter("max_len must be >= 1");
    ClassificationTable t;
    if (p.family()) {
        t.family = p.family()->family;
        t.d = p.family()->d;
    }
    t.options = opt;

    std::vector<StringWord> words = enumerate_strings(p, opt.max_len);
    struct Item {
        bool band;
        StringWord w;
        Band b;
        Elem lambda;
        int m;
    };
    std::vector<Item> items;
    for (const StringWord& w : words) items.push_back({false, w, {}, 0, 0});
    const int band_len = opt.band_max_len < 0 ? opt.max_len : opt.band_max_len;
    const Field BF(opt.field_ext);
    if (band_len > 0) {
        std::vector<Band> bands = enumerate_bands(p, band_len);
        for (const Band& b : bands)
            for (Elem l : BF.units()) items.push_back({true, {}, b, l, 1});
        for (int i = 0; i < int(bands.size()) && i < opt.m2_spot; ++i) items.push_back({true, {}, bands[i], 1, 2});
    }

    t.rows.resize(items.size());
    parallel_for(items.size(), opt.jobs, [&](std::size_t i) {
        const Item& it = items[i];
        ClassRow& r = t.rows[i];
        std::optional<Representation> M;
        if (it.band) {
            M = band_module(p, it.b, it.lambda, it.m, BF);
            r.kind = "band";
            r.word = format_band(p, it.b);
            r.length = it.b.length();
            r.lambda = std::to_string(int(it.lambda));
            r.m = it.m;
        } else {
            M = string_module(p, it.w);
            r.kind = "string";
            r.word = format_word(p, it.w);
            r.length = it.w.length();
        }
        r.dimvec = dimension_vector(*M);
        r.end_dim = end_dim(*M);
        r.stable_end_dim = stable_end_dim(*M);
        Representation O = omega(*M);
        r.ext1_dim = O.is_zero() ? 0 : stable_hom_dim(O, *M);
        r.hit = r.stable_end_dim == 1;
    });

    // group the string hits by component
    ComponentIndex idx(p, opt.max_len + opt.slack);
    std::map<std::string, ComponentSummary> comps;
    for (std::size_t i = 0; i < words.size(); ++i) {
        ClassRow& r = t.rows[i];
        r.component = idx.key(words[i]);
        if (r.hit && !r.component.empty()) {
            auto& c = comps[r.component];
            c.key = r.component;
            ++c.hits;
        }
    }
    std::vector<std::string> keys;
    for (auto& [k, c] : comps) keys.push_back(k);
    std::vector<std::string> types(keys.size());
    parallel_for(keys.size(), opt.jobs, [&](std::size_t i) {
        types[i] = component_type(p, parse_word(p, keys[i]), opt.radius).text();
    });
    for (std::size_t i = 0; i < keys.size(); ++i) comps[keys[i]].type = types[i];
    for (std::size_t i = 0; i < words.size(); ++i) {
        ClassRow& r = t.rows[i];
        auto it = comps.find(r.component);
        if (it != comps.end()) r.component_type = it->second.type;
    }
    for (auto& [k, c] : comps) t.components.push_back(c);
    std::sort(t.components.begin(), t.components.end(), [&](const ComponentSummary& a, const ComponentSummary& b) {
        return word_less(parse_word(p, a.key), parse_word(p, b.key));
    });
    return t;
}

json to_json(const ClassificationTable& t) {
    json rows = json::array();
    for (const ClassRow& r : t.rows) {
        json o = {{"kind", r.kind},
                  {"word", r.word},
                  {"length", r.length},
                  {"dimension_vector", r.dimvec},
                  {"end", r.end_dim},
                  {"stable_end", r.stable_end_dim},
                  {"ext1", r.ext1_dim},
                  {"stable_end_is_k", r.hit}};
        if (r.kind == "band") {
            o["lambda"] = r.lambda;
            o["m"] = r.m;
        } else {
            o["component"] = r.component;
            if (!r.component_type.empty()) o["component_type"] = r.component_type;
        }
        rows.push_back(o);
    }
    json comps = json::array();
    for (const ComponentSummary& c : t.components) comps.push_back({{"key", c.key}, {"type", c.type}, {"hits", c.hits}});
    int hits = 0;
    for (const ClassRow& r : t.rows) hits += r.hit;
    return {{"format", "biserial-classification"},
            {"version", 1},
            {"family", t.family},
            {"d", t.d},
            {"max_len", t.options.max_len},
            {"band_max_len", t.options.band_max_len < 0 ? t.options.max_len : t.options.band_max_len},
            {"field", Field(t.options.field_ext).name()},
            {"rows", rows},
            {"hits", hits},
            {"components", comps}};
}

std::string to_markdown(const ClassificationTable& t) {
    std::ostringstream os;
    os << "| kind | string | dims | End | stable End | Ext1 | component | type | verdict |\n";
    os << "|---|---|---|---|---|---|---|---|---|\n";
    for (const ClassRow& r : t.rows) {
        std::string dv;
        for (std::size_t i = 0; i < r.dimvec.size(); ++i) dv += (i ? "," : "") + std::to_string(r.dimvec[i]);
        std::string w = r.word;
        if (r.kind == "band") w += " (lambda " + r.lambda + ", m " + std::to_string(r.m) + ")";
        os << "| " << r.kind << " | `" << w << "` | (" << dv << ") | " << r.end_dim << " | " << r.stable_end_dim
           << " | " << r.ext1_dim << " | " << (r.component.empty() ? "" : "`" + r.component + "`") << " | "
           << r.component_type << " | " << (r.hit ? "stable End = k" : "-") << " |\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- membership

namespace {

struct Seeds {
    std::vector<std::string> zero_component;  // part i: whole components
    std::vector<std::string> tubes;           // part ii: Omega-orbits
    std::vector<std::string> orbits;          // part iii: Omega-orbits
    std::vector<std::pair<std::string, std::string>> same_component;  // structural claims
};

Seeds seeds_for(const std::string& family) {
    if (family == "psl1")
        return {{"1_0"}, {"1_1", "1_2"}, {"be ga et", "be- de- et-", "ga et de", "ga- be- de-"}, {}};
    if (family == "psl2") return {{"1_0"}, {"be", "ka"}, {"de", "et"}, {}};
    if (family == "a7") return {{"1_0"}, {"et de be", "be ga et"}, {"1_1", "be al- ga et"}, {{"1_2", "be ga et"}}};
    throw InvalidParameter("no component description for family '" + family + "'");
}

}  // namespace

MembershipReport verify_membership(const Presentation& p, const ClassificationTable& t) {
    MembershipReport rep;
    if (!p.family()) throw InvalidParameter("presentation has no family tag");
    const std::string fam = p.family()->family;
    const Seeds seeds = seeds_for(fam);
    const int L = t.options.max_len;
    ComponentIndex idx(p, L + t.options.slack);

    std::map<std::string, const ClassRow*> by_word;
    for (const ClassRow& r : t.rows) {
        if (r.kind != "string") {
            if (r.hit) rep.failures.push_back("band " + r.word + " (lambda " + r.lambda + ", m " + std::to_string(r.m) + ") has stable End = k");
            continue;
        }
        by_word[r.word] = &r;
        rep.hits += r.hit;
    }

    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.failures.push_back(s);
    };

    // part i: the components of the seeds and their Omega-translates
    MembershipPart pi{"i", {}, {}, 0};
    for (const std::string& s : seeds.zero_component) {
        StringWord w = parse_word(p, s);
        pi.seeds.push_back(s);
        std::vector<std::string> keys{idx.key(w)};
        if (auto o = omega_word(p, w)) {
            pi.seeds.push_back(format_word(p, *o));
            keys.push_back(idx.key(*o));
        }
        if (fam == "psl2") {
            // Omega of the component of T_0 holds T_1 and T_2
            for (const char* t12 : {"1_1", "1_2"})
                if (idx.key(parse_word(p, t12)) != keys.back())
                    fail(std::string(t12) + " is not in the Omega-translate of the component of " + s);
        }
        for (const std::string& k : keys) {
            if (k.empty()) continue;
            for (const StringWord& m : idx.members(k))
                if (m.length() <= L) pi.members.push_back(format_word(p, m));
        }
        auto ct = component_type(p, w, t.options.radius);
        if (ct.kind != ComponentType::Kind::ZAEvidence) fail("component of " + s + " is " + ct.text());
    }
    rep.parts.push_back(pi);

    MembershipPart pii{"ii", seeds.tubes, {}, 0};
    for (const std::string& s : seeds.tubes) {
        StringWord w = parse_word(p, s);
        for (const StringWord& m : omega_orbit(p, w, L))
            if (m.length() <= L) pii.members.push_back(format_word(p, m));
        auto ct = component_type(p, w, t.options.radius);
        if (ct.kind != ComponentType::Kind::Tube || ct.rank != 3) fail("component of " + s + " is " + ct.text() + ", expected tube(3)");
    }
    rep.parts.push_back(pii);

    MembershipPart piii{"iii", seeds.orbits, {}, 1};
    for (const std::string& s : seeds.orbits)
        for (const StringWord& m : omega_orbit(p, parse_word(p, s), L))
            if (m.length() <= L) piii.members.push_back(format_word(p, m));
    rep.parts.push_back(piii);

    for (const auto& [a, b] : seeds.same_component)
        if (idx.key(parse_word(p, a)) != idx.key(parse_word(p, b)))
            fail(a + " and " + b + " are in different components");

    std::set<std::string> predicted;
    for (MembershipPart& part : rep.parts) {
        std::sort(part.members.begin(), part.members.end());
        part.members.erase(std::unique(part.members.begin(), part.members.end()), part.members.end());
        for (const std::string& m : part.members) {
            predicted.insert(m);
            auto it = by_word.find(m);
            if (it == by_word.end()) {
                fail("part " + part.name + ": " + m + " missing from the table");
                continue;
            }
            const ClassRow& r = *it->second;
            if (!r.hit) fail("part " + part.name + ": " + m + " has stable End of dimension " + std::to_string(r.stable_end_dim));
            else if (r.ext1_dim != part.expected_ext1)
                fail("part " + part.name + ": " + m + " has Ext1 of dimension " + std::to_string(r.ext1_dim));
        }
    }
    for (const auto& [w, r] : by_word)
        if (r->hit && !predicted.count(w)) fail("hit " + w + " lies in none of the predicted components");
    for (const std::string& f : rep.failures)
        if (f.rfind("band", 0) == 0) rep.ok = false;
    return rep;
}

json to_json(const MembershipReport& r) {
    json parts = json::array();
    for (const MembershipPart& p : r.parts)
        parts.push_back({{"part", p.name}, {"seeds", p.seeds}, {"members", p.members}, {"ext1", p.expected_ext1}});
    return {{"ok", r.ok}, {"hits", r.hits}, {"parts", parts}, {"failures", r.failures}};
}

}  // namespace biserial
