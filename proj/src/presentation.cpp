#include "biserial/presentation.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "biserial/errors.hpp"

namespace biserial {

using nlohmann::json;

struct Presentation::Data {
    int nv = 0;
    std::vector<Arrow> arrows;
    std::vector<Path> forbidden;
    std::vector<std::pair<Path, Path>> socle;
    std::vector<Path> sf;
    std::optional<FamilyTag> family;
    std::vector<ProjectiveShape> shapes;
    std::vector<std::string> errors;
    std::string hash;
};

namespace {

bool occurs_in(const Path& needle, const Path& hay) {
    if (needle.empty() || needle.size() > hay.size()) return false;
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

bool path_killed(const std::vector<Path>& sf, const Path& p) {
    for (const Path& f : sf)
        if (occurs_in(f, p)) return true;
    return false;
}

// Arrows x out of the end of q such that q+x survives in the string quotient.
std::vector<int> live_extensions(const Presentation::Data& d, const std::vector<Path>& sf, const Path& q) {
    std::vector<int> out;
    int v = d.arrows[q.back()].target;
    for (int x = 0; x < int(d.arrows.size()); ++x) {
        if (d.arrows[x].source != v) continue;
        Path r = q;
        r.push_back(x);
        if (!path_killed(sf, r)) out.push_back(x);
    }
    return out;
}

void add_unique(std::vector<Path>& v, const Path& p) {
    if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
}

// Start from the monomials and both members of every socle pair, then add any
// extra path needed so that the live paths from each vertex are exactly the arms
// of the projective there.
void derive(Presentation::Data& d) {
    d.sf.clear();
    d.errors.clear();
    for (const Path& f : d.forbidden) add_unique(d.sf, f);
    for (const auto& [a, b] : d.socle) {
        add_unique(d.sf, a);
        add_unique(d.sf, b);
    }
    const int nv = d.nv;
    for (int round = 0; round < 64; ++round) {
        bool changed = false;
        d.shapes.assign(nv, ProjectiveShape{});
        d.errors.clear();
        for (int u = 0; u < nv; ++u) {
            ProjectiveShape& sh = d.shapes[u];
            sh.vertex = u;
            for (const auto& [a, b] : d.socle)
                if (!a.empty() && d.arrows[a.front()].source == u) {
                    sh.arms = {a, b};
                    break;
                }
            if (!sh.arms.empty()) {
                std::sort(sh.arms.begin(), sh.arms.end());
                for (const Path& arm : sh.arms) {
                    for (std::size_t k = 1; k < arm.size(); ++k) {
                        Path q(arm.begin(), arm.begin() + k);
                        if (path_killed(d.sf, q)) {
                            d.errors.push_back("arm of P(" + std::to_string(u) + ") is killed at length " +
                                               std::to_string(k));
                            break;
                        }
                        for (int x : live_extensions(d, d.sf, q)) {
                            if (k + 1 < arm.size() && x == arm[k]) continue;
                            Path r = q;
                            r.push_back(x);
                            add_unique(d.sf, r);
                            changed = true;
                        }
                    }
                }
            } else {
                std::vector<int> outs;
                for (int x = 0; x < int(d.arrows.size()); ++x)
                    if (d.arrows[x].source == u && !path_killed(d.sf, Path{x})) outs.push_back(x);
                if (outs.size() != 1) {
                    d.errors.push_back("vertex " + std::to_string(u) + " has no socle relation but " +
                                       std::to_string(outs.size()) + " outgoing arrows");
                    if (outs.empty()) continue;
                }
                Path q{outs.front()};
                for (int guard = 0; guard < 4096; ++guard) {
                    auto ext = live_extensions(d, d.sf, q);
                    if (ext.empty()) break;
                    if (ext.size() > 1) {
                        d.errors.push_back("ambiguous continuation from P(" + std::to_string(u) + ")");
                        break;
                    }
                    q.push_back(ext.front());
                }
                if (d.arrows[q.back()].target != u)
                    d.errors.push_back("uniserial P(" + std::to_string(u) + ") does not end at its top vertex");
                sh.arms = {q};
            }
        }
        if (!changed) break;
    }
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex_digest(const std::string& s) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(s)));
    return buf;
}

Path repeat(const Path& p, int n) {
    Path r;
    for (int i = 0; i < n; ++i) r.insert(r.end(), p.begin(), p.end());
    return r;
}

}  // namespace

Presentation::Presentation(int num_vertices, std::vector<Arrow> arrows, std::vector<Path> forbidden,
                           std::vector<std::pair<Path, Path>> socle_pairs, std::optional<FamilyTag> family) {
    auto d = std::make_shared<Data>();
    d->nv = num_vertices;
    d->arrows = std::move(arrows);
    d->forbidden = std::move(forbidden);
    d->socle = std::move(socle_pairs);
    d->family = std::move(family);
    for (const Arrow& a : d->arrows)
        if (a.source < 0 || a.source >= num_vertices || a.target < 0 || a.target >= num_vertices)
            throw InvalidParameter("arrow " + a.name + " has an endpoint outside the vertex set");
    auto check_ids = [&](const Path& p) {
        for (int a : p)
            if (a < 0 || a >= int(d->arrows.size())) throw UnknownArrow("arrow index " + std::to_string(a));
    };
    for (const Path& p : d->forbidden) check_ids(p);
    for (const auto& [a, b] : d->socle) {
        check_ids(a);
        check_ids(b);
    }
    derive(*d);
    d_ = d;
    d->hash = hex_digest(to_json().dump());
}

Presentation Presentation::with_string_forbidden(std::vector<Path> sf) const {
    auto d = std::make_shared<Data>(*d_);
    d->sf = std::move(sf);
    auto p = Presentation(d);
    d->hash = hex_digest(p.to_json().dump());
    return p;
}

int Presentation::num_vertices() const { return d_->nv; }
int Presentation::num_arrows() const { return int(d_->arrows.size()); }
const std::vector<Arrow>& Presentation::arrows() const { return d_->arrows; }
const Arrow& Presentation::arrow(int a) const { return d_->arrows.at(a); }
const std::vector<Path>& Presentation::forbidden_paths() const { return d_->forbidden; }
const std::vector<std::pair<Path, Path>>& Presentation::socle_pairs() const { return d_->socle; }
const std::vector<Path>& Presentation::string_forbidden() const { return d_->sf; }
const std::optional<FamilyTag>& Presentation::family() const { return d_->family; }
const std::vector<std::string>& Presentation::derivation_errors() const { return d_->errors; }
const ProjectiveShape& Presentation::projective_shape(int u) const { return d_->shapes.at(u); }

int Presentation::arrow_index(const std::string& name) const {
    for (int a = 0; a < num_arrows(); ++a)
        if (d_->arrows[a].name == name) return a;
    throw UnknownArrow("no arrow named '" + name + "'");
}

std::vector<int> Presentation::arrows_into(int v) const {
    std::vector<int> r;
    for (int a = 0; a < num_arrows(); ++a)
        if (d_->arrows[a].target == v) r.push_back(a);
    return r;
}

std::vector<int> Presentation::arrows_out_of(int v) const {
    std::vector<int> r;
    for (int a = 0; a < num_arrows(); ++a)
        if (d_->arrows[a].source == v) r.push_back(a);
    return r;
}

bool Presentation::is_composable(const Path& p) const {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (arrow(p[i]).target != arrow(p[i + 1]).source) return false;
    return true;
}

bool Presentation::contains_forbidden(const Path& p) const { return path_killed(d_->sf, p); }

int Presentation::max_forbidden_length() const {
    int m = 0;
    for (const Path& f : d_->sf) m = std::max(m, int(f.size()));
    return m;
}

std::optional<int> Presentation::continuation(int a) const {
    for (int b : arrows_out_of(arrow(a).target))
        if (!contains_forbidden(Path{a, b})) return b;
    return std::nullopt;
}

std::optional<int> Presentation::predecessor(int b) const {
    for (int a : arrows_into(arrow(b).source))
        if (!contains_forbidden(Path{a, b})) return a;
    return std::nullopt;
}

std::string Presentation::path_text(const Path& p) const {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += arrow(p[i]).name;
    }
    return s;
}

Path Presentation::parse_path(const std::string& text) const {
    std::istringstream in(text);
    Path p;
    std::string tok;
    while (in >> tok) p.push_back(arrow_index(tok));
    return p;
}

json Presentation::to_json() const {
    auto names = [&](const Path& p) {
        json a = json::array();
        for (int x : p) a.push_back(arrow(x).name);
        return a;
    };
    json j;
    j["format"] = "biserial-presentation";
    j["version"] = 1;
    json verts = json::array();
    for (int v = 0; v < d_->nv; ++v) verts.push_back(v);
    j["vertices"] = verts;
    json arr = json::array();
    for (const Arrow& a : d_->arrows) arr.push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
    j["arrows"] = arr;
    json fb = json::array();
    for (const Path& p : d_->forbidden) fb.push_back(names(p));
    j["forbidden_paths"] = fb;
    json sp = json::array();
    for (const auto& [a, b] : d_->socle) sp.push_back(json::array({names(a), names(b)}));
    j["socle_pairs"] = sp;
    json sf = json::array();
    for (const Path& p : d_->sf) sf.push_back(names(p));
    j["string_forbidden"] = sf;
    if (d_->family)
        j["family"] = {{"name", d_->family->family}, {"d", d_->family->d}};
    else
        j["family"] = nullptr;
    return j;
}

Presentation Presentation::from_json(const json& j) {
    if (j.value("format", "") != "biserial-presentation")
        throw InvalidParameter("not a presentation document");
    if (j.value("version", 0) != 1) throw InvalidParameter("unsupported presentation version");
    int nv = int(j.at("vertices").size());
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows"))
        arrows.push_back({a.at("name").get<std::string>(), a.at("source").get<int>(), a.at("target").get<int>()});
    auto idx = [&](const std::string& n) {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == n) return int(i);
        throw UnknownArrow("no arrow named '" + n + "'");
    };
    auto path = [&](const json& a) {
        Path p;
        for (const auto& n : a) p.push_back(idx(n.get<std::string>()));
        return p;
    };
    std::vector<Path> forbidden;
    for (const auto& f : j.at("forbidden_paths")) forbidden.push_back(path(f));
    std::vector<std::pair<Path, Path>> socle;
    for (const auto& s : j.at("socle_pairs")) socle.emplace_back(path(s.at(0)), path(s.at(1)));
    std::optional<FamilyTag> fam;
    if (j.contains("family") && !j["family"].is_null())
        fam = FamilyTag{j["family"].at("name").get<std::string>(), j["family"].at("d").get<int>()};
    Presentation p(nv, arrows, std::move(forbidden), std::move(socle), fam);
    if (j.contains("string_forbidden")) {
        std::vector<Path> sf;
        for (const auto& f : j["string_forbidden"]) sf.push_back(path(f));
        if (sf != p.string_forbidden()) return p.with_string_forbidden(std::move(sf));
    }
    return p;
}

std::string Presentation::hash() const { return d_->hash; }

Presentation build_psl1(int d) {
    if (d < 3) throw InvalidParameter("psl1 needs d >= 3, got " + std::to_string(d));
    enum { be, ga, de, et };
    std::vector<Arrow> arrows = {{"be", 1, 0}, {"ga", 0, 1}, {"de", 0, 2}, {"et", 2, 0}};
    int n = 1 << (d - 2);
    std::vector<Path> forbidden = {{be, ga}, {et, de}};
    std::vector<std::pair<Path, Path>> socle = {{repeat({ga, be, de, et}, n), repeat({de, et, ga, be}, n)}};
    return Presentation(3, arrows, forbidden, socle, FamilyTag{"psl1", d});
}

Presentation build_psl2(int d) {
    if (d < 3) throw InvalidParameter("psl2 needs d >= 3, got " + std::to_string(d));
    enum { be, ga, ka, la, de, et };
    std::vector<Arrow> arrows = {{"be", 0, 1}, {"ga", 1, 0}, {"ka", 0, 2},
                                 {"la", 2, 0}, {"de", 1, 2}, {"et", 2, 1}};
    int n = 1 << (d - 2);
    // The zero relation "la then be" stands where the relation list in the source has the
    // socle path "ga then be"; see the decisions ledger.
    std::vector<Path> forbidden = {{be, de}, {de, la}, {la, be}, {ga, ka}, {ka, et}, {et, ga}};
    std::vector<std::pair<Path, Path>> socle = {
        {{be, ga}, {ka, la}},
        {{la, ka}, repeat({et, de}, n)},
        {repeat({de, et}, n), {ga, be}},
    };
    return Presentation(3, arrows, forbidden, socle, FamilyTag{"psl2", d});
}

Presentation build_a7() {
    enum { al, be, ga, de, et };
    std::vector<Arrow> arrows = {{"al", 1, 1}, {"be", 1, 0}, {"ga", 0, 1}, {"de", 0, 2}, {"et", 2, 0}};
    std::vector<Path> forbidden = {{al, be}, {ga, al}, {be, ga}, {et, de}};
    std::vector<std::pair<Path, Path>> socle = {
        {{ga, be, de, et}, {de, et, ga, be}},
        {{al, al}, {be, de, et, ga}},
    };
    return Presentation(3, arrows, forbidden, socle, FamilyTag{"a7", 3});
}

Presentation build_family(const std::string& family, int d) {
    if (family == "psl1") return build_psl1(d);
    if (family == "psl2") return build_psl2(d);
    if (family == "a7") {
        if (d != 3) throw InvalidParameter("a7 has d = 3 only");
        return build_a7();
    }
    throw InvalidParameter("unknown family '" + family + "' (expected psl1, psl2 or a7)");
}

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

ValidationReport validate(const Presentation& p) {
    ValidationReport rep;
    auto add = [&](std::string name, std::string witness) {
        rep.checks.push_back({std::move(name), witness.empty(), std::move(witness)});
    };

    std::string w;
    for (int v = 0; v < p.num_vertices() && w.empty(); ++v) {
        if (p.arrows_out_of(v).size() > 2) w = "vertex " + std::to_string(v) + " is the source of more than two arrows";
        else if (p.arrows_into(v).size() > 2)
            w = "vertex " + std::to_string(v) + " is the target of more than two arrows";
    }
    add("at_most_two_arrows", w);

    w.clear();
    for (int a = 0; a < p.num_arrows() && w.empty(); ++a) {
        int after = 0, before = 0;
        for (int b : p.arrows_out_of(p.arrow(a).target))
            if (!p.contains_forbidden(Path{a, b})) ++after;
        for (int b : p.arrows_into(p.arrow(a).source))
            if (!p.contains_forbidden(Path{b, a})) ++before;
        if (after > 1) w = "arrow " + p.arrow(a).name + " has two continuations";
        else if (before > 1) w = "arrow " + p.arrow(a).name + " has two predecessors";
    }
    add("unique_continuation", w);

    w.clear();
    for (const Path& f : p.forbidden_paths())
        if (f.empty() || !p.is_composable(f)) w = "relation [" + p.path_text(f) + "] is not a path";
    for (const auto& [a, b] : p.socle_pairs()) {
        if (a.empty() || !p.is_composable(a)) w = "socle path [" + p.path_text(a) + "] is not a path";
        if (b.empty() || !p.is_composable(b)) w = "socle path [" + p.path_text(b) + "] is not a path";
        if (w.empty() && (p.arrow(a.front()).source != p.arrow(b.front()).source ||
                          p.arrow(a.back()).target != p.arrow(b.back()).target))
            w = "socle pair [" + p.path_text(a) + "] / [" + p.path_text(b) + "] has mismatched endpoints";
    }
    add("relations_composable", w);

    w.clear();
    const auto& sf = p.string_forbidden();
    auto in_sf = [&](const Path& x) { return std::find(sf.begin(), sf.end(), x) != sf.end(); };
    for (const Path& f : p.forbidden_paths())
        if (!in_sf(f)) w = "[" + p.path_text(f) + "] missing from string_forbidden";
    for (const auto& [a, b] : p.socle_pairs())
        if (!in_sf(a) || !in_sf(b)) w = "socle pair member missing from string_forbidden";
    add("string_forbidden_contains_relations", w);

    w.clear();
    for (const std::string& e : p.derivation_errors()) {
        w = e;
        break;
    }
    add("projective_arms_consistent", w);
    return rep;
}

json to_json(const ValidationReport& r) {
    json a = json::array();
    for (const auto& c : r.checks) {
        json o = {{"name", c.name}, {"passed", c.passed}};
        if (!c.passed) o["witness"] = c.witness;
        a.push_back(o);
    }
    return {{"ok", r.ok()}, {"checks", a}};
}

}  // namespace biserial
