#include "biserial/matrix.hpp"

#include <algorithm>
#include <cassert>

#include "biserial/errors.hpp"

namespace biserial {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(d_.begin(), d_.end(), [](Elem x) { return x == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
    Matrix b(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
    Matrix m(r_, int(idx.size()));
    for (int i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m(i, int(j)) = (*this)(i, idx[j]);
    return m;
}

std::vector<Elem> Matrix::column(int j) const {
    std::vector<Elem> v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    assert(a.rows() == b.rows());
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    assert(a.cols() == b.cols());
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<std::vector<Elem>>& cols) {
    Matrix m(rows, int(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rows; ++i) m(i, int(j)) = cols[j][i];
    return m;
}

void axpy(const Field& F, Elem c, const Elem* src, Elem* dst, int len) {
    if (c == 0) return;
    if (c == 1) {
        for (int k = 0; k < len; ++k) dst[k] ^= src[k];
        return;
    }
    const Elem* m = F.mul_row(c);
    for (int k = 0; k < len; ++k) dst[k] ^= m[src[k]];
}

Matrix mul(const Field& F, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        const Elem* ar = a.row(i);
        Elem* cr = c.row(i);
        for (int k = 0; k < a.cols(); ++k)
            if (ar[k]) axpy(F, ar[k], b.row(k), cr, b.cols());
    }
    return c;
}

Matrix add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape");
    Matrix c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) ^= b(i, j);
    return c;
}

Matrix scale(const Field& F, Elem c, const Matrix& a) {
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = F.mul(c, a(i, j));
    return r;
}

Echelon rref(const Field& F, Matrix a) {
    const int R = a.rows(), C = a.cols();
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int p = -1;
        for (int i = r; i < R; ++i)
            if (a(i, c)) { p = i; break; }
        if (p < 0) continue;
        if (p != r) std::swap_ranges(a.row(p), a.row(p) + C, a.row(r));
        Elem lead = a(r, c);
        if (lead != 1) {
            Elem li = F.inv(lead);
            const Elem* m = F.mul_row(li);
            Elem* rr = a.row(r);
            for (int k = c; k < C; ++k) rr[k] = m[rr[k]];
        }
        for (int i = 0; i < R; ++i)
            if (i != r && a(i, c)) axpy(F, a(i, c), a.row(r) + c, a.row(i) + c, C - c);
        piv.push_back(c);
        ++r;
    }
    Echelon e;
    e.R = a.block(0, 0, r, C);
    e.pivots = std::move(piv);
    return e;
}

int rank(const Field& F, const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return int(rref(F, a).pivots.size());
}

Matrix nullspace(const Field& F, const Matrix& a) {
    const int C = a.cols();
    Echelon e = rref(F, a);
    std::vector<char> is_piv(C, 0);
    for (int p : e.pivots) is_piv[p] = 1;
    std::vector<int> free_cols;
    for (int j = 0; j < C; ++j)
        if (!is_piv[j]) free_cols.push_back(j);
    Matrix n(C, int(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        int f = free_cols[k];
        n(f, int(k)) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) n(e.pivots[r], int(k)) = e.R(int(r), f);
    }
    return n;
}

std::optional<Matrix> solve(const Field& F, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve shape");
    const int C = a.cols();
    Echelon e = rref(F, Matrix::hstack(a, b));
    Matrix x(C, b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        int p = e.pivots[r];
        if (p >= C) return std::nullopt;
        for (int j = 0; j < b.cols(); ++j) x(p, j) = e.R(int(r), C + j);
    }
    return x;
}

std::optional<Matrix> inverse(const Field& F, const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    if (rank(F, a) != a.rows()) return std::nullopt;
    return solve(F, a, Matrix::identity(a.rows()));
}

Matrix column_basis(const Field& F, const Matrix& a) {
    if (a.rows() == 0) return Matrix(0, 0);
    return a.columns(rref(F, a).pivots);
}

std::vector<Elem> Span::reduce(std::vector<Elem> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        int p = piv_[r];
        if (v[p]) axpy(F_, v[p], rows_[r].data(), v.data(), n_);
    }
    return v;
}

bool Span::contains(std::vector<Elem> v) const {
    v = reduce(std::move(v));
    return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

bool Span::insert(std::vector<Elem> v) {
    v = reduce(std::move(v));
    int p = -1;
    for (int i = 0; i < n_; ++i)
        if (v[i]) { p = i; break; }
    if (p < 0) return false;
    if (v[p] != 1) {
        Elem li = F_.inv(v[p]);
        for (auto& x : v) x = F_.mul(li, x);
    }
    for (auto& row : rows_)
        if (row[p]) axpy(F_, row[p], v.data(), row.data(), n_);
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
}

}  // namespace biserial
