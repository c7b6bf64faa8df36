#pragma once

#include "kingdon/scalar.hpp"

#include <vector>

namespace kingdon {

// Dense row-major matrix of exact rationals. Desk-scale only: everything in
// this project is at most 24x24 stacked constraint rows on an 8-dim algebra.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix diagonal(const std::vector<Scalar>& d);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& operator()(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    Matrix transposed() const;
    bool is_symmetric() const;
    bool is_diagonal() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v);

struct Echelon {
    Matrix reduced;
    int rank = 0;
    std::vector<int> pivot_cols;
};

// Reduced row-echelon form, exact Gauss-Jordan.
Echelon rref(Matrix m);

// Basis of the right null space { x : m x = 0 }. Empty iff m is injective.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

// Throws Error when singular.
Matrix inverse(const Matrix& m);

Scalar determinant(const Matrix& m);

struct Congruence {
    Matrix d;  // diagonal
    Matrix p;  // invertible, p^T g p = d
};

// Symmetric Gaussian elimination over Q. A hyperbolic block with zero
// diagonal is broken up by the substitution e_t -> e_t + e_u (2 invertible).
// Diagonal entries are not normalized; only their signs are canonical.
Congruence congruence_diagonalize(const Matrix& g);  // throws NonSymmetric

struct SignCounts {
    int zero = 0, positive = 0, negative = 0;
    friend bool operator==(const SignCounts&, const SignCounts&) = default;
};
SignCounts diagonal_signs(const Matrix& d);

}  // namespace kingdon
