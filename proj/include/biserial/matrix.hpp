#pragma once

#include <optional>
#include <vector>

#include "biserial/field.hpp"

namespace biserial {

// Dense row-major matrix over a field of characteristic 2, one byte per entry.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), d_(std::size_t(rows) * cols, 0) {}

    static Matrix identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Elem& operator()(int i, int j) { return d_[std::size_t(i) * c_ + j]; }
    Elem operator()(int i, int j) const { return d_[std::size_t(i) * c_ + j]; }
    Elem* row(int i) { return d_.data() + std::size_t(i) * c_; }
    const Elem* row(int i) const { return d_.data() + std::size_t(i) * c_; }
    const std::vector<Elem>& data() const { return d_; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const Matrix& b);
    Matrix columns(const std::vector<int>& idx) const;
    std::vector<Elem> column(int j) const;

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix block_diag(const Matrix& a, const Matrix& b);
    static Matrix from_columns(int rows, const std::vector<std::vector<Elem>>& cols);

private:
    int r_ = 0, c_ = 0;
    std::vector<Elem> d_;
};

// dst += c * src over len entries
void axpy(const Field& F, Elem c, const Elem* src, Elem* dst, int len);

Matrix mul(const Field& F, const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Field& F, Elem c, const Matrix& a);

struct Echelon {
    Matrix R;                 // reduced row echelon form, zero rows dropped
    std::vector<int> pivots;  // pivot column of each row of R
};

Echelon rref(const Field& F, Matrix a);
int rank(const Field& F, const Matrix& a);
// columns form a basis of {x : a x = 0}
Matrix nullspace(const Field& F, const Matrix& a);
// some X with a X = b, if one exists
std::optional<Matrix> solve(const Field& F, const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Field& F, const Matrix& a);
// columns form a basis of the column space (chosen among columns of a)
Matrix column_basis(const Field& F, const Matrix& a);

// Incrementally maintained subspace of F^n in reduced echelon form.
class Span {
public:
    Span(const Field& F, int n) : F_(F), n_(n) {}
    bool insert(std::vector<Elem> v);  // true if v was independent
    bool contains(std::vector<Elem> v) const;
    std::vector<Elem> reduce(std::vector<Elem> v) const;
    int dim() const { return int(rows_.size()); }
    int ambient() const { return n_; }

private:
    Field F_;
    int n_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<int> piv_;
};

}  // namespace biserial
