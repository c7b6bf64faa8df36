#include "kingdon/matrix.hpp"

#include "kingdon/errors.hpp"

namespace kingdon {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i)
        m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw Error("ragged rows");
        for (int j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_)
        return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r))
                return false;
    return true;
}

bool Matrix::is_diagonal() const {
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (r != c && (*this)(r, c) != 0)
                return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0)
            return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw Error("matrix shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols_; ++j)
                r(i, j) += aik * b(k, j);
        }
    return r;
}

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw Error("matrix/vector shape mismatch");
    std::vector<Scalar> r(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                r[i] += m(i, j) * v[j];
    return r;
}

Echelon rref(Matrix m) {
    Echelon out;
    int rows = m.rows(), cols = m.cols();
    int lead = 0;
    for (int c = 0; c < cols && lead < rows; ++c) {
        int pivot = -1;
        for (int r = lead; r < rows; ++r)
            if (m(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != lead)
            for (int j = 0; j < cols; ++j)
                std::swap(m(pivot, j), m(lead, j));
        Scalar inv = Scalar(1) / m(lead, c);
        for (int j = 0; j < cols; ++j)
            m(lead, j) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == lead || m(r, c) == 0)
                continue;
            Scalar f = m(r, c);
            for (int j = 0; j < cols; ++j)
                m(r, j) -= f * m(lead, j);
        }
        out.pivot_cols.push_back(c);
        ++lead;
    }
    out.rank = lead;
    out.reduced = std::move(m);
    return out;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    Echelon e = rref(m);
    int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_cols)
        is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> v(cols);
        v[free] = 1;
        for (size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.reduced(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw Error("inverse of non-square matrix");
    int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    Echelon e = rref(std::move(aug));
    int left_rank = 0;
    for (int c : e.pivot_cols)
        if (c < n)
            ++left_rank;
    if (left_rank != n)
        throw Error("matrix is singular");
    Matrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            inv(r, c) = e.reduced(r, n + c);
    return inv;
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols())
        throw Error("determinant of non-square matrix");
    Matrix a = m;
    int n = a.rows();
    Scalar det = 1;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (a(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return Scalar(0);
        if (pivot != c) {
            for (int j = 0; j < n; ++j)
                std::swap(a(pivot, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        Scalar inv = Scalar(1) / a(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (a(r, c) == 0)
                continue;
            Scalar f = a(r, c) * inv;
            for (int j = c; j < n; ++j)
                a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

namespace {

// Column operation col_t += f * col_u on p, mirrored as a congruence on d.
void add_col(Matrix& d, Matrix& p, int t, int u, const Scalar& f) {
    int n = d.rows();
    for (int r = 0; r < n; ++r)
        d(r, t) += f * d(r, u);
    for (int c = 0; c < n; ++c)
        d(t, c) += f * d(u, c);
    for (int r = 0; r < p.rows(); ++r)
        p(r, t) += f * p(r, u);
}

void swap_cols(Matrix& d, Matrix& p, int t, int u) {
    int n = d.rows();
    for (int r = 0; r < n; ++r)
        std::swap(d(r, t), d(r, u));
    for (int c = 0; c < n; ++c)
        std::swap(d(t, c), d(u, c));
    for (int r = 0; r < p.rows(); ++r)
        std::swap(p(r, t), p(r, u));
}

}  // namespace

Congruence congruence_diagonalize(const Matrix& g) {
    if (!g.is_symmetric())
        throw NonSymmetric("congruence_diagonalize: matrix is not symmetric");
    int n = g.rows();
    Matrix d = g;
    Matrix p = Matrix::identity(n);
    for (int r = 0; r < n; ++r) {
        if (d(r, r) == 0) {
            bool row_clear = true;
            for (int c = r + 1; c < n; ++c)
                if (d(r, c) != 0) {
                    row_clear = false;
                    break;
                }
            if (row_clear)
                continue;  // already diagonal at r; keep the zero in place
            int t = -1;
            for (int s = r + 1; s < n; ++s)
                if (d(s, s) != 0) {
                    t = s;
                    break;
                }
            if (t >= 0) {
                swap_cols(d, p, r, t);
            } else {
                // all trailing diagonal entries vanish; look off-diagonal
                int a = -1, b = -1;
                for (int s = r; s < n && a < 0; ++s)
                    for (int u = s + 1; u < n; ++u)
                        if (d(s, u) != 0) {
                            a = s;
                            b = u;
                            break;
                        }
                if (a < 0)
                    break;  // trailing block is zero, done
                add_col(d, p, a, b, Scalar(1));  // now d(a,a) = 2 d(a,b) != 0
                if (a != r)
                    swap_cols(d, p, r, a);
            }
        }
        Scalar pivot_inv = Scalar(1) / d(r, r);
        for (int c = r + 1; c < n; ++c)
            if (d(r, c) != 0)
                add_col(d, p, c, r, -d(r, c) * pivot_inv);
    }
    return {std::move(d), std::move(p)};
}

SignCounts diagonal_signs(const Matrix& d) {
    SignCounts s;
    for (int i = 0; i < d.rows(); ++i) {
        int sg = sign_of(d(i, i));
        if (sg == 0)
            ++s.zero;
        else if (sg > 0)
            ++s.positive;
        else
            ++s.negative;
    }
    return s;
}

}  // namespace kingdon
