#include "biserial/homology.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "biserial/errors.hpp"

namespace biserial {

using nlohmann::json;

std::string HomDescriptor::text() const {
    return "hom^" + kind + "(x_" + std::to_string(i) + ", y_" + std::to_string(j) + ", " + std::to_string(l) + ")";
}

std::vector<Elem> flatten(const Morphism& f) {
    std::vector<Elem> v;
    for (const Matrix& b : f.blocks) v.insert(v.end(), b.data().begin(), b.data().end());
    return v;
}

namespace {

void require_compatible(const Representation& M, const Representation& N) {
    if (M.field() != N.field()) throw FieldMismatch(M.field().name() + " vs " + N.field().name());
    if (!M.presentation().same_as(N.presentation())) throw InvalidParameter("modules over different algebras");
}

Morphism unflatten(const Representation& M, const Representation& N, const std::vector<Elem>& x) {
    Morphism f;
    std::size_t o = 0;
    for (int v = 0; v < M.presentation().num_vertices(); ++v) {
        Matrix b(N.dim(v), M.dim(v));
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) b(i, j) = x[o++];
        f.blocks.push_back(std::move(b));
    }
    return f;
}

// complement of the radical at each vertex: vectors whose images generate M
std::vector<std::pair<int, std::vector<Elem>>> top_generators(const Representation& M) {
    Subspace rad = radical(M);
    std::vector<std::pair<int, std::vector<Elem>>> gens;
    for (int v = 0; v < M.presentation().num_vertices(); ++v) {
        Span s(M.field(), M.dim(v));
        for (int j = 0; j < rad.basis[v].cols(); ++j) s.insert(rad.basis[v].column(j));
        for (int i = 0; i < M.dim(v); ++i) {
            std::vector<Elem> e(M.dim(v), 0);
            e[i] = 1;
            if (s.insert(e)) gens.emplace_back(v, e);
        }
    }
    return gens;
}

// Matrices of every basis path of P(v), evaluated in N: at[v][w][b] is the
// action on N_v of the b-th basis path of P(v) that ends at w.
struct PathImages {
    std::vector<std::vector<std::vector<Matrix>>> at;
};

PathImages path_images(const Representation& N) {
    const Presentation& p = N.presentation();
    PathImages r;
    r.at.resize(p.num_vertices());
    for (int v = 0; v < p.num_vertices(); ++v) {
        Representation Pv = projective_module(p, v, N.field());
        r.at[v].resize(p.num_vertices());
        for (int w = 0; w < p.num_vertices(); ++w)
            for (const Path& q : Pv.path_labels()[w]) r.at[v][w].push_back(N.path_matrix(q, v));
    }
    return r;
}

// The image of n in N_v along each basis path of P(v): the map P(v) -> N sending the top to n.
Morphism map_from_projective(const Representation& N, const PathImages& im, int v, const std::vector<Elem>& n) {
    const Field& F = N.field();
    Morphism g;
    for (int w = 0; w < N.presentation().num_vertices(); ++w) {
        const auto& mats = im.at[v][w];
        Matrix b(N.dim(w), int(mats.size()));
        for (std::size_t k = 0; k < mats.size(); ++k) {
            const Matrix& q = mats[k];
            for (int i = 0; i < q.rows(); ++i) {
                Elem s = 0;
                for (int j = 0; j < q.cols(); ++j)
                    if (q(i, j) && n[j]) s ^= F.mul(q(i, j), n[j]);
                b(i, int(k)) = s;
            }
        }
        g.blocks.push_back(std::move(b));
    }
    return g;
}

// Projective presentation of M: cover, a section of the epi, and generators
// of its kernel written in the coordinates of the cover.
struct Analysis {
    ProjectiveCover cover;
    std::vector<Matrix> section;  // P_w x M_w with epi_w * section_w = 1
    std::vector<std::vector<int>> offset;  // offset[k][w]: first index of summand k inside P_w
    std::vector<std::pair<int, std::vector<Elem>>> relations;
};

ProjectiveCover build_cover(const Representation& M) {
    const Presentation& p = M.presentation();
    const int nv = p.num_vertices();
    ProjectiveCover c{zero_module(p, M.field()), {}, {}, {}};
    auto gens = top_generators(M);
    PathImages im;
    if (!gens.empty()) im = path_images(M);
    std::vector<Morphism> parts;
    for (auto& [v, x] : gens) {
        c.vertices.push_back(v);
        c.lifts.push_back(x);
        c.P = direct_sum(c.P, projective_module(p, v, M.field()));
        parts.push_back(map_from_projective(M, im, v, x));
    }
    if (gens.empty()) c.P.set_path_labels(std::vector<std::vector<Path>>(nv));
    for (int w = 0; w < nv; ++w) {
        Matrix b(M.dim(w), 0);
        for (const Morphism& g : parts) b = Matrix::hstack(b, g.blocks[w]);
        c.epi.blocks.push_back(std::move(b));
    }
    c.P.set_provenance({"abstract", "projective cover"});
    return c;
}

Analysis analyze(const Representation& M) {
    const Presentation& p = M.presentation();
    const Field& F = M.field();
    const int nv = p.num_vertices();
    Analysis a{build_cover(M), {}, {}, {}};
    for (int w = 0; w < nv; ++w) {
        auto s = solve(F, a.cover.epi.blocks[w], Matrix::identity(M.dim(w)));
        if (!s) throw InvalidParameter("projective cover is not surjective");
        a.section.push_back(*s);
    }
    std::vector<int> run(nv, 0);
    for (int v : a.cover.vertices) {
        a.offset.push_back(run);
        Representation Pv = projective_module(p, v, F);
        for (int w = 0; w < nv; ++w) run[w] += Pv.dim(w);
    }
    Morphism incl;
    Representation K = kernel(a.cover.P, a.cover.epi, &incl);
    for (auto& [w, x] : top_generators(K)) {
        const Matrix& B = incl.blocks[w];
        std::vector<Elem> y(B.rows(), 0);
        for (int i = 0; i < B.rows(); ++i)
            for (int j = 0; j < B.cols(); ++j)
                if (B(i, j) && x[j]) y[i] ^= F.mul(B(i, j), x[j]);
        a.relations.emplace_back(w, std::move(y));
    }
    return a;
}

HomSpace hom_with(const Analysis& A, const Representation& M, const Representation& N, const PathImages& im) {
    const Field& F = M.field();
    const int nv = M.presentation().num_vertices();
    const auto& verts = A.cover.vertices;
    const int K = int(verts.size());
    std::vector<int> uoff(K + 1, 0);
    for (int k = 0; k < K; ++k) uoff[k + 1] = uoff[k] + N.dim(verts[k]);
    const int U = uoff[K];
    HomSpace out;
    if (U == 0) return out;
    int rows = 0;
    for (auto& [w, om] : A.relations) rows += N.dim(w);
    Matrix C(rows, U);
    int r0 = 0;
    for (auto& [w, om] : A.relations) {
        for (int k = 0; k < K; ++k) {
            const auto& mats = im.at[verts[k]][w];
            for (std::size_t b = 0; b < mats.size(); ++b) {
                Elem c = om[A.offset[k][w] + b];
                if (!c) continue;
                const Matrix& q = mats[b];
                for (int i = 0; i < q.rows(); ++i)
                    axpy(F, c, q.row(i), C.row(r0 + i) + uoff[k], q.cols());
            }
        }
        r0 += N.dim(w);
    }
    Matrix sol = rows ? nullspace(F, C) : Matrix::identity(U);
    for (int s = 0; s < sol.cols(); ++s) {
        Morphism h;
        std::vector<Morphism> gs;
        for (int k = 0; k < K; ++k) {
            std::vector<Elem> n(N.dim(verts[k]));
            for (int j = 0; j < N.dim(verts[k]); ++j) n[j] = sol(uoff[k] + j, s);
            gs.push_back(map_from_projective(N, im, verts[k], n));
        }
        for (int w = 0; w < nv; ++w) {
            Matrix g(N.dim(w), 0);
            for (const Morphism& gk : gs) g = Matrix::hstack(g, gk.blocks[w]);
            h.blocks.push_back(mul(F, g, A.section[w]));
        }
        out.basis.push_back({std::move(h), std::nullopt});
    }
    return out;
}

}  // namespace

HomSpace intertwiner_space(const Representation& M, const Representation& N) {
    require_compatible(M, N);
    const Presentation& p = M.presentation();
    const Field& F = M.field();
    const int nv = p.num_vertices();
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + N.dim(v) * M.dim(v);
    const int U = off[nv];
    HomSpace out;
    if (U == 0) return out;
    int rows = 0;
    for (int a = 0; a < p.num_arrows(); ++a) rows += N.dim(p.arrow(a).target) * M.dim(p.arrow(a).source);
    Matrix C(rows, U);
    int r0 = 0;
    for (int a = 0; a < p.num_arrows(); ++a) {
        int s = p.arrow(a).source, t = p.arrow(a).target;
        const Matrix &Na = N.map(a), &Ma = M.map(a);
        // (N_a X_s - X_t M_a)(i, j)
        for (int i = 0; i < N.dim(t); ++i)
            for (int j = 0; j < M.dim(s); ++j) {
                Elem* row = C.row(r0 + i * M.dim(s) + j);
                for (int k = 0; k < N.dim(s); ++k)
                    if (Na(i, k)) row[off[s] + k * M.dim(s) + j] ^= Na(i, k);
                for (int k = 0; k < M.dim(t); ++k)
                    if (Ma(k, j)) row[off[t] + i * M.dim(t) + k] ^= Ma(k, j);
            }
        r0 += N.dim(t) * M.dim(s);
    }
    Matrix sol = rows ? nullspace(F, C) : Matrix::identity(U);
    for (int c = 0; c < sol.cols(); ++c) out.basis.push_back({unflatten(M, N, sol.column(c)), std::nullopt});
    return out;
}

HomSpace hom_space(const Representation& M, const Representation& N) {
    require_compatible(M, N);
    if (M.total_dim() == 0 || N.total_dim() == 0) return {};
    Analysis A = analyze(M);
    return hom_with(A, M, N, path_images(N));
}

int hom_dim(const Representation& M, const Representation& N) { return hom_space(M, N).dim(); }

std::optional<HomElement> hom_from_descriptor(const Presentation& p, const StringWord& S, const StringWord& T,
                                              const HomDescriptor& d, const Field& F) {
    Representation X = string_module(p, S, F), Y = string_module(p, T, F);
    auto xs = string_basis_positions(p, S), ys = string_basis_positions(p, T);
    Morphism f = zero_morphism(X, Y);
    if (d.kind.size() != 2 || d.l < 0) return std::nullopt;
    int sx = d.kind[0] == '+' ? 1 : -1;
    int ty = d.kind[1] == '+' ? 1 : -1;
    for (int t = 0; t <= d.l; ++t) {
        int xi = d.i + sx * t;
        int yj = ty > 0 ? d.j - d.l + t : d.j + d.l - t;
        if (xi < 0 || xi >= int(xs.size()) || yj < 0 || yj >= int(ys.size())) return std::nullopt;
        if (xs[xi].first != ys[yj].first) return std::nullopt;
        f.blocks[xs[xi].first](ys[yj].second, xs[xi].second) = 1;
    }
    if (!is_intertwiner(X, Y, f)) return std::nullopt;
    return HomElement{f, d};
}

HomSpace hom_basis_string(const Presentation& p, const StringWord& S, const StringWord& T, const Field& F) {
    if (!is_valid_string(p, S)) throw InvalidString("'" + format_word(p, S) + "' is not a string");
    if (!is_valid_string(p, T)) throw InvalidString("'" + format_word(p, T) + "' is not a string");
    const auto& w = S.letters;
    const auto& t = T.letters;
    const int m = S.length(), n = T.length();
    auto vs = vertex_sequence(p, S), vt = vertex_sequence(p, T);
    auto factor_ok = [&](int a, int b) { return (a == 0 || !w[a - 1].inv) && (b == m || w[b].inv); };
    auto image_ok = [&](int c, int d) { return (c == 0 || t[c - 1].inv) && (d == n || !t[d].inv); };
    HomSpace out;
    Representation X = string_module(p, S, F), Y = string_module(p, T, F);
    auto xs = string_basis_positions(p, S), ys = string_basis_positions(p, T);
    auto emit = [&](HomDescriptor d, auto pairs) {
        Morphism f = zero_morphism(X, Y);
        for (auto [xi, yj] : pairs) f.blocks[xs[xi].first](ys[yj].second, xs[xi].second) = 1;
        out.basis.push_back({std::move(f), d});
    };
    for (int a = 0; a <= m; ++a)
        for (int b = a; b <= m; ++b) {
            if (!factor_ok(a, b)) continue;
            const int l = b - a;
            for (int c = 0; c + l <= n; ++c) {
                const int d = c + l;
                if (!image_ok(c, d)) continue;
                if (l == 0) {
                    if (vs[a] != vt[c]) continue;
                    emit({"++", a, d, 0}, std::vector<std::pair<int, int>>{{a, c}});
                    continue;
                }
                bool fwd = true, rev = true;
                for (int k = 1; k <= l && (fwd || rev); ++k) {
                    if (w[a + k - 1] != t[c + k - 1]) fwd = false;
                    if (w[a + k - 1] != t[d - k].inverse()) rev = false;
                }
                if (fwd) {
                    std::vector<std::pair<int, int>> pr;
                    for (int k = 0; k <= l; ++k) pr.emplace_back(a + k, c + k);
                    emit({"++", a, d, l}, pr);
                }
                if (rev) {
                    std::vector<std::pair<int, int>> pr;
                    for (int k = 0; k <= l; ++k) pr.emplace_back(a + k, d - k);
                    emit({"+-", a, c, l}, pr);
                }
            }
        }
    return out;
}

ProjectiveCover projective_cover(const Representation& M) { return build_cover(M); }

Representation omega(const Representation& M) {
    ProjectiveCover c = build_cover(M);
    Representation K = kernel(c.P, c.epi);
    K.set_provenance({"abstract", "omega"});
    return K;
}

Representation omega_inverse(const Representation& M) {
    const Presentation& p = M.presentation();
    const Field& F = M.field();
    const int nv = p.num_vertices();
    if (M.total_dim() == 0) return M;
    Subspace soc = socle_space(M);
    Analysis A = analyze(M);
    Representation Q = zero_module(p, F);
    std::vector<Morphism> parts;
    for (int u = 0; u < nv; ++u) {
        const Matrix& S = soc.basis[u];
        if (S.cols() == 0) continue;
        Representation Pu = projective_module(p, u, F);
        const int sigma = projective_socle_index(p, u);
        HomSpace H = hom_with(A, M, Pu, path_images(Pu));
        Span chosen(F, S.cols());
        for (const HomElement& h : H.basis) {
            Matrix img = mul(F, h.map.blocks[u], S);
            std::vector<Elem> r(img.row(sigma), img.row(sigma) + img.cols());
            if (!chosen.insert(r)) continue;
            Q = direct_sum(Q, Pu);
            parts.push_back(h.map);
            if (chosen.dim() == S.cols()) break;
        }
        if (chosen.dim() != S.cols()) throw InvalidParameter("socle of the module does not embed into projectives");
    }
    Morphism iota;
    for (int w = 0; w < nv; ++w) {
        Matrix b(0, M.dim(w));
        for (const Morphism& h : parts) b = Matrix::vstack(b, h.blocks[w]);
        iota.blocks.push_back(std::move(b));
    }
    Representation C = cokernel(Q, iota);
    C.set_provenance({"abstract", "omega inverse"});
    return C;
}

Representation omega_power(const Representation& M, int k) {
    Representation R = M;
    for (int i = 0; i < k; ++i) R = omega(R);
    for (int i = 0; i > k; --i) R = omega_inverse(R);
    return R;
}

namespace {

Span factor_span_with(const Analysis& A, const Representation& M, const Representation& N, FactorTest t) {
    const Presentation& p = M.presentation();
    const Field& F = M.field();
    int ambient = 0;
    for (int v = 0; v < p.num_vertices(); ++v) ambient += N.dim(v) * M.dim(v);
    Span span(F, ambient);
    if (M.total_dim() == 0 || N.total_dim() == 0) return span;
    PathImages imN = path_images(N);
    // generators n of maps P(v) -> N to compose with
    std::vector<std::pair<int, std::vector<Elem>>> targets;
    if (t == FactorTest::Cover) {
        targets = top_generators(N);
    } else {
        for (int v = 0; v < p.num_vertices(); ++v)
            for (int i = 0; i < N.dim(v); ++i) {
                std::vector<Elem> e(N.dim(v), 0);
                e[i] = 1;
                targets.emplace_back(v, e);
            }
    }
    std::map<int, HomSpace> toP;
    for (auto& [v, n] : targets) {
        if (!toP.count(v)) {
            Representation Pv = projective_module(p, v, F);
            toP[v] = hom_with(A, M, Pv, path_images(Pv));
        }
        Morphism g = map_from_projective(N, imN, v, n);
        for (const HomElement& h : toP[v].basis) span.insert(flatten(compose(F, g, h.map)));
    }
    return span;
}

}  // namespace

Span projective_factor_span(const Representation& M, const Representation& N, FactorTest t) {
    require_compatible(M, N);
    if (M.total_dim() == 0) return Span(M.field(), 0);
    return factor_span_with(analyze(M), M, N, t);
}

bool factors_through_projective(const Representation& M, const Representation& N, const Morphism& h) {
    return projective_factor_span(M, N).contains(flatten(h));
}

int stable_hom_dim(const Representation& M, const Representation& N, FactorTest t) {
    require_compatible(M, N);
    if (M.total_dim() == 0 || N.total_dim() == 0) return 0;
    Analysis A = analyze(M);
    int h = hom_with(A, M, N, path_images(N)).dim();
    return h - factor_span_with(A, M, N, t).dim();
}

int stable_end_dim(const Representation& M) { return stable_hom_dim(M, M); }
int end_dim(const Representation& M) { return hom_dim(M, M); }
int ext1_dim(const Representation& M, const Representation& N) { return stable_hom_dim(omega(M), N); }

bool is_projective(const Representation& M) {
    if (M.total_dim() == 0) return true;
    return build_cover(M).P.total_dim() == M.total_dim();
}

namespace {

bool invertible(const Field& F, const Morphism& f) {
    for (const Matrix& b : f.blocks)
        if (rank(F, b) != b.rows()) return false;
    return true;
}

Morphism combo(const Field& F, const HomSpace& H, const std::vector<Elem>& c) {
    Morphism f = H.basis[0].map;
    for (Matrix& b : f.blocks) b = Matrix(b.rows(), b.cols());
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k]) continue;
        for (std::size_t v = 0; v < f.blocks.size(); ++v) {
            Matrix& b = f.blocks[v];
            const Matrix& s = H.basis[k].map.blocks[v];
            for (int i = 0; i < b.rows(); ++i) axpy(F, c[k], s.row(i), b.row(i), b.cols());
        }
    }
    return f;
}

bool nilpotent(const Field& F, const Morphism& f) {
    for (const Matrix& b : f.blocks) {
        Matrix x = b;
        for (int k = 1; k < b.rows() && !x.is_zero(); ++k) x = mul(F, x, b);
        if (!x.is_zero()) return false;
    }
    return true;
}

}  // namespace

IsoResult isomorphism_test(const Representation& M, const Representation& N, std::uint64_t seed) {
    require_compatible(M, N);
    const Field& F = M.field();
    if (M.dims() != N.dims()) return {false, "invariant:dimension-vector"};
    if (M.total_dim() == 0) return {true, "exhaustive"};
    if (radical_series(M) != radical_series(N)) return {false, "invariant:radical-series"};
    if (socle(M) != socle(N)) return {false, "invariant:socle"};
    HomSpace H = hom_space(M, N);
    if (H.dim() == 0) return {false, "invariant:hom"};
    int hnm = hom_dim(N, M), emm = end_dim(M), enn = end_dim(N);
    if (H.dim() != hnm || H.dim() != emm || H.dim() != enn) return {false, "invariant:hom-dimensions"};
    std::mt19937_64 rng(seed);
    const int n = H.dim();
    std::vector<Elem> c(n);
    for (int tries = 0; tries < 256; ++tries) {
        for (auto& x : c) x = Elem(rng() & std::uint64_t(F.order() - 1));
        if (invertible(F, combo(F, H, c))) return {true, "invertible-found"};
    }
    double log_space = double(n) * F.degree();
    if (log_space <= 16) {
        std::uint64_t total = std::uint64_t(1) << int(log_space);
        for (std::uint64_t code = 1; code < total; ++code) {
            std::uint64_t x = code;
            for (int k = 0; k < n; ++k) {
                c[k] = Elem(x & std::uint64_t(F.order() - 1));
                x >>= F.degree();
            }
            if (invertible(F, combo(F, H, c))) return {true, "exhaustive"};
        }
        return {false, "exhaustive"};
    }
    if (is_indecomposable(M) && is_indecomposable(N)) return {true, "indirect"};
    return {false, "search-exhausted"};
}

bool is_isomorphic(const Representation& M, const Representation& N) { return isomorphism_test(M, N).isomorphic; }

bool is_indecomposable(const Representation& M) {
    if (M.total_dim() == 0) return false;
    const Field& F = M.field();
    HomSpace E = hom_space(M, M);
    const int n = E.dim();
    Morphism id = identity_morphism(M);
    int ambient = int(flatten(id).size());
    Span J(F, ambient);
    std::vector<Morphism> jb;
    for (const HomElement& b : E.basis) {
        std::optional<Morphism> r;
        for (int c = 0; c < F.order() && !r; ++c) {
            Morphism x = b.map;
            for (std::size_t v = 0; v < x.blocks.size(); ++v)
                for (int i = 0; i < x.blocks[v].rows(); ++i) x.blocks[v](i, i) ^= Elem(c);
            if (nilpotent(F, x)) r = x;
        }
        if (!r) return false;
        if (J.insert(flatten(*r))) jb.push_back(*r);
    }
    if (J.dim() != n - 1) return false;
    // J must be an ideal of nilpotent elements: closed under products, powers vanish
    for (const Morphism& a : jb)
        for (const Morphism& b : jb)
            if (!J.contains(flatten(compose(F, a, b)))) return false;
    std::vector<Morphism> power = jb;
    for (int k = 0; k <= M.total_dim() && !power.empty(); ++k) {
        Span next(F, ambient);
        std::vector<Morphism> nb;
        for (const Morphism& a : power)
            for (const Morphism& b : jb) {
                Morphism c = compose(F, a, b);
                if (next.insert(flatten(c))) nb.push_back(c);
            }
        power = std::move(nb);
    }
    return power.empty();
}

namespace {

std::mutex g_words_mu;
std::map<std::pair<std::string, int>, std::vector<StringWord>> g_words;

const std::vector<StringWord>& canonical_words(const Presentation& p, int len) {
    std::lock_guard<std::mutex> lock(g_words_mu);
    auto key = std::make_pair(p.hash(), len);
    auto it = g_words.find(key);
    if (it != g_words.end()) return it->second;
    std::vector<StringWord> ws;
    for (const StringWord& w : all_words_of_length(p, len))
        if (is_canonical(p, w)) ws.push_back(w);
    std::sort(ws.begin(), ws.end(), word_less);
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return g_words.emplace(key, std::move(ws)).first->second;
}

}  // namespace

std::optional<StringWord> identify_string(const Representation& M) {
    const Presentation& p = M.presentation();
    const int n = M.total_dim();
    if (n == 0) return std::nullopt;
    auto layers = radical_series(M);
    for (const StringWord& w : canonical_words(p, n - 1)) {
        std::vector<int> dv(p.num_vertices(), 0);
        for (int v : vertex_sequence(p, w)) ++dv[v];
        if (dv != M.dims()) continue;
        Representation X = string_module(p, w, M.field());
        if (radical_series(X) != layers) continue;
        if (is_isomorphic(X, M)) return w;
    }
    return std::nullopt;
}

json to_json(const Presentation& p, const HomSpace& h) {
    json arr = json::array();
    for (const HomElement& e : h.basis) {
        json blocks = json::array();
        for (const Matrix& b : e.map.blocks) {
            json rows = json::array();
            for (int i = 0; i < b.rows(); ++i) rows.push_back(std::vector<int>(b.row(i), b.row(i) + b.cols()));
            blocks.push_back(rows);
        }
        json o = {{"blocks", blocks}};
        if (e.descriptor)
            o["descriptor"] = {{"kind", e.descriptor->kind},
                               {"i", e.descriptor->i},
                               {"j", e.descriptor->j},
                               {"l", e.descriptor->l}};
        arr.push_back(o);
    }
    (void)p;
    return {{"dimension", h.dim()}, {"basis", arr}};
}

}  // namespace biserial
