#include "biserial/mod2defo.hpp"

#include <random>

#include "biserial/errors.hpp"

namespace biserial {

using nlohmann::json;

bool UdrMod2Report::ok() const {
    if (checks.empty()) return false;
    for (const UdrCheck& c : checks)
        if (!c.passed) return false;
    return true;
}

const UdrCheck* UdrMod2Report::find(const std::string& name) const {
    for (const UdrCheck& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

Morphism power(const Field& F, const Representation& M, const Morphism& t, int k) {
    Morphism r = identity_morphism(M);
    for (int i = 0; i < k; ++i) r = compose(F, t, r);
    return r;
}

// z_i -> z_{i-l} on the string module of a directed word (z_n is the top)
Morphism shift_down(const Presentation& p, const StringWord& w, const Representation& U, int l) {
    auto pos = string_basis_positions(p, w);
    Morphism t = zero_morphism(U, U);
    for (int i = l; i < int(pos.size()); ++i) {
        auto [v, a] = pos[i];
        auto [v2, b] = pos[i - l];
        if (v != v2) return t;  // not vertex preserving; caught by the intertwiner check
        t.blocks[v](b, a) = 1;
    }
    return t;
}

// rank t^k = (N - k) l for k = 0..N: U is free of rank l over k[t]/(t^N)
bool free_profile(const Field& F, const Representation& U, const Morphism& t, int N, int l, std::string& detail) {
    detail.clear();
    Morphism r = identity_morphism(U);
    for (int k = 0; k <= N; ++k) {
        int rk = morphism_rank(F, r);
        detail += (k ? "," : "") + std::to_string(rk);
        if (rk != (N - k) * l) return false;
        r = compose(F, t, r);
    }
    return true;
}

std::string series_of(const std::vector<int>& T, int reps) {
    std::vector<std::vector<int>> layers;
    for (int r = 0; r < reps; ++r)
        for (int v : T) layers.push_back({v});
    return series_text(layers);
}

}  // namespace

UdrMod2Report uniserial_udr_report(const Representation& Y) {
    if (Y.is_zero() || !is_uniserial(Y)) throw NotUniserial("the subject module is not uniserial");
    const Presentation& p = Y.presentation();
    const Field& F = Y.field();
    UdrMod2Report rep;
    rep.subject = Y.provenance().kind + (Y.provenance().detail.empty() ? "" : " " + Y.provenance().detail);
    rep.series = radical_series(Y);
    std::vector<int> T;
    for (const auto& layer : rep.series) T.push_back(layer[0]);
    const int l = int(T.size());
    const int u = T[0];

    auto add = [&](std::string name, bool ok, std::string detail) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    };

    int e = end_dim(Y);
    add("end_is_k", e == 1, "dim End(Y) = " + std::to_string(e));
    int x = ext1_dim(Y, Y);
    add("ext1_is_k", x == 1, "dim Ext1(Y,Y) = " + std::to_string(x));

    // an arm of P(u) whose interior runs (T_2..T_l, T_1..T_l, ..., T_1..T_l)
    const ProjectiveShape& sh = p.projective_shape(u);
    int arm = -1, N = 0;
    for (int a = 0; a < int(sh.arms.size()) && arm < 0; ++a) {
        const Path& A = sh.arms[a];
        const int len = int(A.size());
        if (len % l != 0) continue;
        int r = len / l;
        if (r < 2 || (r & (r - 1)) != 0) continue;
        bool match = true;
        for (int i = 0; i + 1 < len && match; ++i) match = p.arrow(A[i]).target == T[(i + 1) % l];
        if (match) {
            arm = a;
            N = r;
        }
    }
    if (!add("projective_top_shape", arm >= 0,
             arm >= 0 ? "arm " + p.path_text(sh.arms[arm]) + " of P(" + std::to_string(u) + "), U2 of length " +
                            std::to_string(int(sh.arms[arm].size()) - 1)
                      : "no arm of P(" + std::to_string(u) + ") has the required shape"))
        return rep;
    while ((1 << rep.s) < N) ++rep.s;
    const Path& A = sh.arms[arm];

    // U = P(u) modulo the submodule generated by the other arm (or the socle)
    Representation P = projective_module(p, u, F);
    int top = -1;
    for (int i = 0; i < int(P.path_labels()[u].size()); ++i)
        if (P.path_labels()[u][i].empty()) top = i;
    Subspace gens;
    for (int v = 0; v < p.num_vertices(); ++v) gens.basis.emplace_back(P.dim(v), 0);
    std::vector<Elem> e_top(P.dim(u), 0);
    e_top[top] = 1;
    if (sh.uniserial()) {
        Matrix c(P.dim(u), 1);
        c(projective_socle_index(p, u), 0) = 1;
        gens.basis[u] = c;
    } else {
        int b = sh.arms[1 - arm][0];
        int v = p.arrow(b).target;
        std::vector<Elem> g = P.act({b}, u, e_top);
        gens.basis[v] = Matrix::from_columns(P.dim(v), {g});
    }
    Representation U = quotient(P, generated_submodule(P, gens));
    U.set_provenance({"abstract", "P(" + std::to_string(u) + ") modulo the other arm"});

    StringWord uw;
    for (int i = int(A.size()) - 2; i >= 0; --i) uw.letters.push_back({A[i], false});
    Representation Us = string_module(p, uw, F);
    bool shape = is_uniserial(U) && series_text(radical_series(U)) == series_of(T, N) && U.total_dim() == N * l &&
                 is_isomorphic(U, Us);
    add("lift_shape", shape, "U = " + format_word(p, uw) + ", series " + series_text(radical_series(U)));
    rep.lift = Us;

    int xu = ext1_dim(Us, Y);
    add("ext1_lift_vs_Y", xu == 0, "dim Ext1(U,Y) = " + std::to_string(xu));

    Morphism t = shift_down(p, uw, Us, l);
    std::string prof;
    bool shift_ok = is_intertwiner(Us, Us, t) && free_profile(F, Us, t, N, l, prof);
    Morphism tq;
    Representation top_part = cokernel(Us, t, &tq);
    shift_ok = shift_ok && is_isomorphic(top_part, Y);
    add("shift_free", shift_ok, "ranks of t^k: " + prof + "; U/tU isomorphic to Y");

    // U' = U / t^(N-1) U drops the bottom copy of Y
    StringWord tw{std::vector<Letter>(uw.letters.begin() + l, uw.letters.end()), -1, 1};
    if (tw.letters.empty()) tw = StringWord::trivial_at(vertex_sequence(p, uw)[l]);
    Representation Ut = string_module(p, tw, F);
    Morphism tt = shift_down(p, tw, Ut, l);
    Representation Uq = quotient(Us, image(F, power(F, Us, t, N - 1)));
    std::string prof2;
    bool trunc = is_intertwiner(Ut, Ut, tt) && free_profile(F, Ut, tt, N - 1, l, prof2) && is_isomorphic(Ut, Uq) &&
                 is_isomorphic(cokernel(Ut, tt), Y);
    add("truncation", trunc, "U' = " + format_word(p, tw) + ", ranks of t^k: " + prof2);
    rep.truncated = Ut;

    if (rep.ok()) rep.verdict = "k[t]/(t^" + std::to_string(N) + ")";
    return rep;
}

UdrMod2Report verify_uniserial_udr(const Representation& Y) {
    UdrMod2Report r = uniserial_udr_report(Y);
    for (const UdrCheck& c : r.checks)
        if (!c.passed) throw HypothesisFailed(c.name, c.detail);
    return r;
}

json to_json(const UdrMod2Report& r) {
    json checks = json::array();
    for (const UdrCheck& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    json o = {{"subject", r.subject},
              {"series", series_text(r.series)},
              {"checks", checks},
              {"s", r.s},
              {"ok", r.ok()},
              {"verdict", r.verdict}};
    if (r.lift) o["lift"] = {{"dimension", r.lift->total_dim()}, {"series", series_text(radical_series(*r.lift))}};
    if (r.truncated)
        o["truncated_lift"] = {{"dimension", r.truncated->total_dim()},
                               {"series", series_text(radical_series(*r.truncated))}};
    return o;
}

MiddleTermReport middle_term_report(const Representation& Y, const Representation& X, std::uint64_t seed) {
    if (X.total_dim() != 2 * Y.total_dim())
        throw DimensionMismatch("dim X = " + std::to_string(X.total_dim()) + " but dim Y = " +
                                std::to_string(Y.total_dim()));
    const Field& F = Y.field();
    MiddleTermReport rep;
    rep.split = is_isomorphic(X, direct_sum(Y, Y));
    HomSpace H = hom_space(Y, X);
    rep.hom_dim = H.dim();
    if (H.dim() == 0) return rep;

    auto combine = [&](const std::vector<Elem>& c) {
        Morphism f = zero_morphism(Y, X);
        for (int k = 0; k < H.dim(); ++k) {
            if (!c[k]) continue;
            for (std::size_t v = 0; v < f.blocks.size(); ++v)
                f.blocks[v] = add(f.blocks[v], scale(F, c[k], H.basis[k].map.blocks[v]));
        }
        return f;
    };
    auto good = [&](const Morphism& f) {
        if (!is_injective(F, f)) return false;
        return is_isomorphic(cokernel(X, f), Y);
    };

    const int q = F.order();
    double space = 1;
    for (int k = 0; k < H.dim(); ++k) space *= q;
    bool found = false;
    if (space <= 65536) {
        std::vector<Elem> c(H.dim(), 0);
        for (long long idx = 1; idx < (long long)space && !found; ++idx) {
            long long r = idx;
            for (int k = 0; k < H.dim(); ++k) {
                c[k] = Elem(r % q);
                r /= q;
            }
            ++rep.searched;
            found = good(combine(c));
        }
        rep.witness = found ? "exhaustive" : "none";
    } else {
        std::mt19937_64 rng(seed);
        std::vector<Elem> c(H.dim());
        for (int it = 0; it < 4096 && !found; ++it) {
            for (Elem& x : c) x = Elem(rng() % q);
            ++rep.searched;
            found = good(combine(c));
        }
        rep.witness = found ? "random" : "none";
    }
    rep.holds = found && !rep.split;
    return rep;
}

bool verify_middle_term(const Representation& Y, const Representation& X) { return middle_term_report(Y, X).holds; }

json to_json(const MiddleTermReport& r) {
    return {{"holds", r.holds}, {"hom_dim", r.hom_dim}, {"searched", r.searched}, {"split", r.split}, {"witness", r.witness}};
}

}  // namespace biserial
