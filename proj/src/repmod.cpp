#include "biserial/repmod.hpp"

#include <algorithm>
#include <cstdio>

#include "biserial/errors.hpp"

namespace biserial {

using nlohmann::json;

Representation::Representation(Presentation p, Field F, std::vector<int> dims, std::vector<Matrix> maps,
                               Provenance prov)
    : p_(std::move(p)), F_(F), dims_(std::move(dims)), maps_(std::move(maps)), prov_(std::move(prov)) {
    if (int(dims_.size()) != p_.num_vertices()) throw DimensionMismatch("one dimension per vertex expected");
    if (int(maps_.size()) != p_.num_arrows()) throw DimensionMismatch("one matrix per arrow expected");
    for (int a = 0; a < p_.num_arrows(); ++a) {
        const Arrow& ar = p_.arrow(a);
        if (maps_[a].rows() != dims_[ar.target] || maps_[a].cols() != dims_[ar.source])
            throw DimensionMismatch("matrix for arrow " + ar.name + " has the wrong shape");
    }
}

int Representation::total_dim() const {
    int s = 0;
    for (int d : dims_) s += d;
    return s;
}

std::vector<Elem> Representation::act(const Path& q, int v, std::vector<Elem> x) const {
    for (int a : q) {
        if (p_.arrow(a).source != v) throw InvalidParameter("path does not start at the vector's vertex");
        const Matrix& m = maps_[a];
        std::vector<Elem> y(m.rows(), 0);
        for (int i = 0; i < m.rows(); ++i) {
            Elem s = 0;
            const Elem* r = m.row(i);
            for (int j = 0; j < m.cols(); ++j)
                if (r[j] && x[j]) s ^= F_.mul(r[j], x[j]);
            y[i] = s;
        }
        x = std::move(y);
        v = p_.arrow(a).target;
    }
    return x;
}

Matrix Representation::path_matrix(const Path& q, int v) const {
    Matrix m = Matrix::identity(dims_[v]);
    for (int a : q) {
        if (p_.arrow(a).source != v) throw InvalidParameter("path does not start at the given vertex");
        m = mul(F_, maps_[a], m);
        v = p_.arrow(a).target;
    }
    return m;
}

Morphism compose(const Field& F, const Morphism& g, const Morphism& f) {
    Morphism h;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(mul(F, g.blocks[v], f.blocks[v]));
    return h;
}

Morphism zero_morphism(const Representation& M, const Representation& N) {
    Morphism f;
    for (int v = 0; v < M.presentation().num_vertices(); ++v) f.blocks.emplace_back(N.dim(v), M.dim(v));
    return f;
}

Morphism identity_morphism(const Representation& M) {
    Morphism f;
    for (int v = 0; v < M.presentation().num_vertices(); ++v) f.blocks.push_back(Matrix::identity(M.dim(v)));
    return f;
}

bool is_intertwiner(const Representation& M, const Representation& N, const Morphism& f) {
    const Field& F = M.field();
    const Presentation& p = M.presentation();
    for (int a = 0; a < p.num_arrows(); ++a) {
        int s = p.arrow(a).source, t = p.arrow(a).target;
        if (mul(F, N.map(a), f.blocks[s]) != mul(F, f.blocks[t], M.map(a))) return false;
    }
    return true;
}

int morphism_rank(const Field& F, const Morphism& f) {
    int r = 0;
    for (const Matrix& b : f.blocks) r += rank(F, b);
    return r;
}

bool is_injective(const Field& F, const Morphism& f) {
    for (const Matrix& b : f.blocks)
        if (rank(F, b) != b.cols()) return false;
    return true;
}

bool is_surjective(const Field& F, const Morphism& f) {
    for (const Matrix& b : f.blocks)
        if (rank(F, b) != b.rows()) return false;
    return true;
}

int Subspace::dim() const {
    int s = 0;
    for (const Matrix& b : basis) s += b.cols();
    return s;
}

Subspace generated_submodule(const Representation& M, const Subspace& gens) {
    const Presentation& p = M.presentation();
    const Field& F = M.field();
    std::vector<Span> spans;
    std::vector<std::vector<std::vector<Elem>>> kept(p.num_vertices());
    for (int v = 0; v < p.num_vertices(); ++v) spans.emplace_back(F, M.dim(v));
    std::vector<std::pair<int, std::vector<Elem>>> queue;
    for (int v = 0; v < p.num_vertices(); ++v)
        for (int j = 0; j < gens.basis[v].cols(); ++j) queue.emplace_back(v, gens.basis[v].column(j));
    while (!queue.empty()) {
        auto [v, x] = std::move(queue.back());
        queue.pop_back();
        if (!spans[v].insert(x)) continue;
        kept[v].push_back(x);
        for (int a : p.arrows_out_of(v)) queue.emplace_back(p.arrow(a).target, M.act({a}, v, x));
    }
    Subspace s;
    for (int v = 0; v < p.num_vertices(); ++v) s.basis.push_back(Matrix::from_columns(M.dim(v), kept[v]));
    return s;
}

Representation submodule(const Representation& M, const Subspace& sub, Morphism* inclusion) {
    const Presentation& p = M.presentation();
    const Field& F = M.field();
    std::vector<int> dims;
    for (const Matrix& b : sub.basis) dims.push_back(b.cols());
    std::vector<Matrix> maps;
    for (int a = 0; a < p.num_arrows(); ++a) {
        int s = p.arrow(a).source, t = p.arrow(a).target;
        Matrix img = mul(F, M.map(a), sub.basis[s]);
        auto x = solve(F, sub.basis[t], img);
        if (!x) throw InvalidParameter("subspace is not closed under arrow " + p.arrow(a).name);
        maps.push_back(*x);
    }
    if (inclusion) inclusion->blocks = sub.basis;
    return Representation(p, F, dims, maps);
}

Representation quotient(const Representation& M, const Subspace& sub, Morphism* projection) {
    const Presentation& p = M.presentation();
    const Field& F = M.field();
    const int nv = p.num_vertices();
    std::vector<Matrix> comp(nv), proj(nv);
    std::vector<int> dims(nv);
    for (int v = 0; v < nv; ++v) {
        const Matrix& B = sub.basis[v];
        Span span(F, M.dim(v));
        for (int j = 0; j < B.cols(); ++j) span.insert(B.column(j));
        std::vector<std::vector<Elem>> extra;
        for (int i = 0; i < M.dim(v); ++i) {
            std::vector<Elem> e(M.dim(v), 0);
            e[i] = 1;
            if (span.insert(e)) extra.push_back(e);
        }
        comp[v] = Matrix::from_columns(M.dim(v), extra);
        dims[v] = comp[v].cols();
        Matrix T = Matrix::hstack(B, comp[v]);
        auto Ti = inverse(F, T);
        if (!Ti) throw InvalidParameter("subspace basis is not independent");
        proj[v] = Ti->block(B.cols(), 0, dims[v], M.dim(v));
    }
    std::vector<Matrix> maps;
    for (int a = 0; a < p.num_arrows(); ++a) {
        int s = p.arrow(a).source, t = p.arrow(a).target;
        maps.push_back(mul(F, proj[t], mul(F, M.map(a), comp[s])));
    }
    if (projection) projection->blocks = proj;
    return Representation(p, F, dims, maps);
}

Representation kernel(const Representation& M, const Morphism& f, Morphism* inclusion) {
    Subspace k;
    for (const Matrix& b : f.blocks) k.basis.push_back(nullspace(M.field(), b));
    return submodule(M, k, inclusion);
}

Subspace image(const Field& F, const Morphism& f) {
    Subspace s;
    for (const Matrix& b : f.blocks) s.basis.push_back(column_basis(F, b));
    return s;
}

Representation cokernel(const Representation& N, const Morphism& f, Morphism* projection) {
    return quotient(N, image(N.field(), f), projection);
}

Representation direct_sum(const Representation& M, const Representation& N) {
    if (M.field() != N.field()) throw FieldMismatch("direct sum over different fields");
    const Presentation& p = M.presentation();
    std::vector<int> dims;
    for (int v = 0; v < p.num_vertices(); ++v) dims.push_back(M.dim(v) + N.dim(v));
    std::vector<Matrix> maps;
    for (int a = 0; a < p.num_arrows(); ++a) maps.push_back(Matrix::block_diag(M.map(a), N.map(a)));
    Representation r(p, M.field(), dims, maps);
    if (!M.path_labels().empty() && !N.path_labels().empty()) {
        auto l = M.path_labels();
        for (int v = 0; v < p.num_vertices(); ++v)
            l[v].insert(l[v].end(), N.path_labels()[v].begin(), N.path_labels()[v].end());
        r.set_path_labels(l);
    }
    return r;
}

Representation zero_module(const Presentation& p, const Field& F) {
    std::vector<Matrix> maps(p.num_arrows());
    return Representation(p, F, std::vector<int>(p.num_vertices(), 0), maps);
}

std::vector<std::pair<int, int>> string_basis_positions(const Presentation& p, const StringWord& s) {
    std::vector<int> vs = vertex_sequence(p, s);
    std::vector<int> count(p.num_vertices(), 0);
    std::vector<std::pair<int, int>> pos;
    for (int v : vs) pos.emplace_back(v, count[v]++);
    return pos;
}

Representation string_module(const Presentation& p, const StringWord& s, const Field& F) {
    if (!is_valid_string(p, s)) throw InvalidString("'" + format_word(p, s) + "' is not a string");
    auto pos = string_basis_positions(p, s);
    std::vector<int> dims(p.num_vertices(), 0);
    for (auto [v, i] : pos) dims[v] = std::max(dims[v], i + 1);
    std::vector<Matrix> maps;
    for (int a = 0; a < p.num_arrows(); ++a) maps.emplace_back(dims[p.arrow(a).target], dims[p.arrow(a).source]);
    for (int i = 1; i <= s.length(); ++i) {
        const Letter& l = s.letters[i - 1];
        if (!l.inv)
            maps[l.arrow](pos[i - 1].second, pos[i].second) = 1;  // z_i -> z_{i-1}
        else
            maps[l.arrow](pos[i].second, pos[i - 1].second) = 1;  // z_{i-1} -> z_i
    }
    return Representation(p, F, dims, maps, {"string", format_word(p, s)});
}

Representation band_module(const Presentation& p, const Band& b, Elem lambda, int m, const Field& F) {
    if (lambda == 0) throw ZeroLambda("band parameter must be nonzero");
    if (int(lambda) >= F.order()) throw InvalidParameter("band parameter outside " + F.name());
    if (m < 1) throw InvalidParameter("band multiplicity must be >= 1");
    if (!is_band(p, b.letters)) throw NotABand("'" + format_band(p, b) + "' is not a band");
    std::vector<Letter> w = b.letters;
    auto first_direct = std::find_if(w.begin(), w.end(), [](const Letter& l) { return !l.inv; });
    std::rotate(w.begin(), first_direct, w.end());
    const int n = int(w.size());
    std::vector<int> slot_vertex(n), slot_local(n);
    std::vector<int> dims(p.num_vertices(), 0);
    for (int i = 0; i < n; ++i) {
        slot_vertex[i] = letter_target(p, w[i]);  // v(i) = e(w_{i+1})
        slot_local[i] = dims[slot_vertex[i]];
        dims[slot_vertex[i]] += m;
    }
    std::vector<Matrix> maps;
    for (int a = 0; a < p.num_arrows(); ++a) maps.emplace_back(dims[p.arrow(a).target], dims[p.arrow(a).source]);
    for (int i = 1; i <= n; ++i) {
        const Letter& l = w[i - 1];
        int from = l.inv ? i - 1 : i % n, to = l.inv ? i % n : i - 1;
        Matrix& M = maps[l.arrow];
        for (int r = 0; r < m; ++r) {
            if (i == 1) {
                M(slot_local[to] + r, slot_local[from] + r) = lambda;
                if (r + 1 < m) M(slot_local[to] + r, slot_local[from] + r + 1) = 1;
            } else {
                M(slot_local[to] + r, slot_local[from] + r) = 1;
            }
        }
    }
    return Representation(p, F, dims, maps,
                          {"band", format_band(p, b) + " ; lambda=" + std::to_string(int(lambda)) +
                                       " ; m=" + std::to_string(m)});
}

namespace {

struct ProjBasis {
    std::vector<Path> paths;  // per global basis vector, in order of creation
    int socle = -1;           // global index
};

ProjBasis projective_basis(const Presentation& p, int u) {
    const ProjectiveShape& sh = p.projective_shape(u);
    ProjBasis b;
    b.paths.push_back({});
    if (sh.uniserial()) {
        const Path& arm = sh.arms[0];
        for (std::size_t k = 1; k <= arm.size(); ++k) b.paths.emplace_back(arm.begin(), arm.begin() + k);
        b.socle = int(b.paths.size()) - 1;
    } else {
        for (const Path& arm : sh.arms)
            for (std::size_t k = 1; k < arm.size(); ++k) b.paths.emplace_back(arm.begin(), arm.begin() + k);
        b.paths.push_back(sh.arms[0]);
        b.socle = int(b.paths.size()) - 1;
    }
    return b;
}

int path_end(const Presentation& p, int u, const Path& q) { return q.empty() ? u : p.arrow(q.back()).target; }

}  // namespace

Representation projective_module(const Presentation& p, int u, const Field& F) {
    if (u < 0 || u >= p.num_vertices()) throw InvalidParameter("no vertex " + std::to_string(u));
    const ProjectiveShape& sh = p.projective_shape(u);
    ProjBasis b = projective_basis(p, u);
    const int n = int(b.paths.size());
    std::vector<int> dims(p.num_vertices(), 0), local(n);
    std::vector<std::vector<Path>> labels(p.num_vertices());
    for (int i = 0; i < n; ++i) {
        int v = path_end(p, u, b.paths[i]);
        local[i] = dims[v]++;
        labels[v].push_back(b.paths[i]);
    }
    auto index_of = [&](const Path& q) -> int {
        for (const Path& arm : sh.arms)
            if (q == arm) return b.socle;
        for (int i = 0; i < n; ++i)
            if (b.paths[i] == q && i != b.socle) return i;
        return -1;
    };
    std::vector<Matrix> maps;
    for (int a = 0; a < p.num_arrows(); ++a) maps.emplace_back(dims[p.arrow(a).target], dims[p.arrow(a).source]);
    for (int i = 0; i < n; ++i) {
        if (i == b.socle) continue;
        for (int a : p.arrows_out_of(path_end(p, u, b.paths[i]))) {
            Path q = b.paths[i];
            q.push_back(a);
            int j = index_of(q);
            if (j >= 0) maps[a](local[j], local[i]) = 1;
        }
    }
    Representation r(p, F, dims, maps, {"projective", std::to_string(u)});
    r.set_path_labels(labels);
    return r;
}

int projective_socle_index(const Presentation& p, int u) {
    ProjBasis b = projective_basis(p, u);
    int v = path_end(p, u, b.paths[b.socle]);
    int local = 0;
    for (int i = 0; i < b.socle; ++i)
        if (path_end(p, u, b.paths[i]) == v) ++local;
    return local;
}

Subspace radical(const Representation& M) {
    const Presentation& p = M.presentation();
    Subspace s;
    for (int v = 0; v < p.num_vertices(); ++v) {
        Matrix acc(M.dim(v), 0);
        for (int a : p.arrows_into(v)) acc = Matrix::hstack(acc, M.map(a));
        s.basis.push_back(column_basis(M.field(), acc));
    }
    return s;
}

Subspace socle_space(const Representation& M) {
    const Presentation& p = M.presentation();
    Subspace s;
    for (int v = 0; v < p.num_vertices(); ++v) {
        Matrix acc(0, M.dim(v));
        for (int a : p.arrows_out_of(v)) acc = Matrix::vstack(acc, M.map(a));
        s.basis.push_back(acc.rows() == 0 ? Matrix::identity(M.dim(v)) : nullspace(M.field(), acc));
    }
    return s;
}

std::vector<std::vector<int>> radical_series(const Representation& M) {
    const Presentation& p = M.presentation();
    const Field& F = M.field();
    const int nv = p.num_vertices();
    std::vector<Matrix> cur(nv);
    for (int v = 0; v < nv; ++v) cur[v] = Matrix::identity(M.dim(v));
    std::vector<std::vector<int>> layers;
    for (int guard = 0; guard <= M.total_dim(); ++guard) {
        std::vector<Matrix> next(nv);
        for (int v = 0; v < nv; ++v) {
            Matrix acc(M.dim(v), 0);
            for (int a : p.arrows_into(v)) acc = Matrix::hstack(acc, mul(F, M.map(a), cur[p.arrow(a).source]));
            next[v] = column_basis(F, acc);
        }
        std::vector<int> layer;
        bool any = false;
        for (int v = 0; v < nv; ++v) {
            for (int k = next[v].cols(); k < cur[v].cols(); ++k) layer.push_back(v);
            if (cur[v].cols() > 0) any = true;
        }
        if (!any) break;
        layers.push_back(layer);
        cur = std::move(next);
    }
    return layers;
}

std::vector<int> top(const Representation& M) {
    auto l = radical_series(M);
    return l.empty() ? std::vector<int>{} : l.front();
}

std::vector<int> socle(const Representation& M) {
    Subspace s = socle_space(M);
    std::vector<int> r;
    for (int v = 0; v < int(s.basis.size()); ++v)
        for (int k = 0; k < s.basis[v].cols(); ++k) r.push_back(v);
    return r;
}

std::vector<int> dimension_vector(const Representation& M) { return M.dims(); }

bool is_uniserial(const Representation& M) {
    for (const auto& l : radical_series(M))
        if (l.size() != 1) return false;
    return true;
}

RelationCheck check_relations(const Representation& M) {
    const Presentation& p = M.presentation();
    const Field& F = M.field();
    for (const Path& q : p.forbidden_paths()) {
        int v = p.arrow(q.front()).source;
        if (!M.path_matrix(q, v).is_zero()) return {false, "zero relation [" + p.path_text(q) + "] acts nontrivially"};
    }
    for (const auto& [a, b] : p.socle_pairs()) {
        int v = p.arrow(a.front()).source;
        if (M.path_matrix(a, v) != M.path_matrix(b, v))
            return {false, "[" + p.path_text(a) + "] and [" + p.path_text(b) + "] act differently"};
    }
    (void)F;
    return {};
}

std::string series_text(const std::vector<std::vector<int>>& layers) {
    std::string s;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (i) s += ",";
        s += "(";
        for (std::size_t j = 0; j < layers[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(layers[i][j]);
        }
        s += ")";
    }
    return s;
}

namespace {

const char* kHex = "0123456789abcdef";

std::string pack_row(const Field& F, const Elem* r, int cols) {
    std::string s;
    if (F.degree() == 1) {
        for (int j = 0; j < cols; j += 4) {
            int nib = 0;
            for (int k = 0; k < 4; ++k) nib = nib << 1 | (j + k < cols ? r[j + k] & 1 : 0);
            s += kHex[nib];
        }
    } else {
        for (int j = 0; j < cols; ++j) {
            s += kHex[r[j] >> 4];
            s += kHex[r[j] & 15];
        }
    }
    return s;
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw InvalidParameter(std::string("bad hex digit '") + c + "'");
}

void unpack_row(const Field& F, const std::string& s, Elem* r, int cols) {
    if (F.degree() == 1) {
        if (int(s.size()) != (cols + 3) / 4) throw DimensionMismatch("packed row has the wrong length");
        for (int j = 0; j < cols; ++j) r[j] = Elem(hex_value(s[j / 4]) >> (3 - j % 4) & 1);
    } else {
        if (int(s.size()) != 2 * cols) throw DimensionMismatch("packed row has the wrong length");
        for (int j = 0; j < cols; ++j) {
            int x = hex_value(s[2 * j]) << 4 | hex_value(s[2 * j + 1]);
            if (x >= F.order()) throw InvalidParameter("entry outside " + F.name());
            r[j] = Elem(x);
        }
    }
}

}  // namespace

json to_json(const Representation& M) {
    const Presentation& p = M.presentation();
    json maps = json::object();
    for (int a = 0; a < p.num_arrows(); ++a) {
        const Matrix& m = M.map(a);
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) rows.push_back(pack_row(M.field(), m.row(i), m.cols()));
        maps[p.arrow(a).name] = {{"rows", m.rows()}, {"cols", m.cols()}, {"hex", rows}};
    }
    return {{"format", "biserial-representation"},
            {"version", 1},
            {"presentation_hash", p.hash()},
            {"field", {{"degree", M.field().degree()}, {"modulus", M.field().modulus()}}},
            {"dims", M.dims()},
            {"maps", maps},
            {"provenance", {{"kind", M.provenance().kind}, {"detail", M.provenance().detail}}}};
}

Representation representation_from_json(const Presentation& p, const json& j) {
    if (j.value("format", "") != "biserial-representation")
        throw InvalidParameter("not a representation document");
    if (j.value("version", 0) != 1) throw InvalidParameter("unsupported representation version");
    Field F(j.at("field").at("degree").get<int>());
    auto dims = j.at("dims").get<std::vector<int>>();
    if (int(dims.size()) != p.num_vertices()) throw DimensionMismatch("dimension vector length");
    std::vector<Matrix> maps;
    for (int a = 0; a < p.num_arrows(); ++a) {
        const json& e = j.at("maps").at(p.arrow(a).name);
        Matrix m(dims[p.arrow(a).target], dims[p.arrow(a).source]);
        if (e.at("rows").get<int>() != m.rows() || e.at("cols").get<int>() != m.cols())
            throw DimensionMismatch("matrix for " + p.arrow(a).name);
        const json& rows = e.at("hex");
        if (int(rows.size()) != m.rows()) throw DimensionMismatch("row count for " + p.arrow(a).name);
        for (int i = 0; i < m.rows(); ++i) unpack_row(F, rows[i].get<std::string>(), m.row(i), m.cols());
        maps.push_back(std::move(m));
    }
    Provenance prov;
    if (j.contains("provenance")) {
        prov.kind = j["provenance"].value("kind", "abstract");
        prov.detail = j["provenance"].value("detail", "");
    }
    return Representation(p, F, dims, maps, prov);
}

}  // namespace biserial
