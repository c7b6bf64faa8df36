#include "kingdon/algebra.hpp"

#include "kingdon/errors.hpp"

#include <sstream>

namespace kingdon {

bool Element::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0)
            return false;
    return true;
}

AlgebraPtr Algebra::create(std::string name, std::vector<std::string> basis_names,
                           std::vector<std::vector<Scalar>> table,
                           std::optional<Matrix> conjugation_matrix) {
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->name_ = std::move(name);
    a->basis_names_ = std::move(basis_names);
    a->dim_ = static_cast<int>(a->basis_names_.size());
    if (a->dim_ < 1)
        throw Error("algebra needs at least the unit basis element");
    if (static_cast<int>(table.size()) != a->dim_ * a->dim_)
        throw Error("structure table has wrong shape");
    for (const auto& entry : table)
        if (static_cast<int>(entry.size()) != a->dim_)
            throw Error("structure table entry has wrong length");
    a->table_ = std::move(table);

    // unitality: 1*b_j = b_j and b_i*1 = b_i
    for (int m = 0; m < a->dim_; ++m) {
        for (int r = 0; r < a->dim_; ++r) {
            Scalar want = (r == m) ? 1 : 0;
            if (a->table(0, m)[r] != want || a->table(m, 0)[r] != want)
                throw Error("structure table is not unital at basis " +
                            a->basis_names_[static_cast<size_t>(m)]);
        }
    }

    // sparse product table, when every basis product is a monomial
    std::vector<Mono> mono(static_cast<size_t>(a->dim_) * a->dim_);
    bool monomial = true;
    Int den = 1;
    for (size_t t = 0; t < mono.size() && monomial; ++t) {
        int nz = 0;
        for (int r = 0; r < a->dim_; ++r)
            if (a->table_[t][r] != 0) {
                ++nz;
                mono[t] = Mono{r, a->table_[t][r], 0};
                den = lcm(den, denominator(a->table_[t][r]));
            }
        if (nz > 1)
            monomial = false;
    }
    if (monomial) {
        for (Mono& m : mono)
            if (m.idx >= 0)
                m.scaled = numerator(m.coeff) * (den / denominator(m.coeff));
        a->mono_ = std::move(mono);
        a->mono_den_ = den;
    }

    if (conjugation_matrix) {
        if (conjugation_matrix->rows() != a->dim_ || conjugation_matrix->cols() != a->dim_)
            throw Error("conjugation matrix has wrong shape");
        a->conj_ = Involution{a, std::move(*conjugation_matrix), InvolutionKind::anti_automorphism};
    }
    return a;
}

const Involution& Algebra::conjugation() const {
    if (!conj_)
        throw NoConjugation("algebra '" + name_ + "' carries no conjugation");
    return *conj_;
}

Element Algebra::element(std::vector<Scalar> coeffs) const {
    if (static_cast<int>(coeffs.size()) != dim_)
        throw Error("coefficient vector has wrong length");
    return Element{shared_from_this(), std::move(coeffs)};
}

Element Algebra::basis_element(int m) const {
    std::vector<Scalar> c(dim_);
    c[m] = 1;
    return Element{shared_from_this(), std::move(c)};
}

Element Algebra::scalar_element(const Scalar& s) const {
    std::vector<Scalar> c(dim_);
    c[0] = s;
    return Element{shared_from_this(), std::move(c)};
}

namespace {

void require_same(const Element& x, const Element& y) {
    if (x.algebra != y.algebra)
        throw AlgebraMismatch("elements of different algebras");
}

}  // namespace

Element operator+(const Element& x, const Element& y) {
    require_same(x, y);
    Element r = x;
    for (size_t m = 0; m < r.coeffs.size(); ++m)
        r.coeffs[m] += y.coeffs[m];
    return r;
}

Element operator-(const Element& x, const Element& y) {
    require_same(x, y);
    Element r = x;
    for (size_t m = 0; m < r.coeffs.size(); ++m)
        r.coeffs[m] -= y.coeffs[m];
    return r;
}

Element operator-(const Element& x) {
    Element r = x;
    for (auto& c : r.coeffs)
        c = -c;
    return r;
}

Element operator*(const Scalar& s, const Element& x) {
    Element r = x;
    for (auto& c : r.coeffs)
        c *= s;
    return r;
}

namespace {

// Denominator-cleared copy: v = out / d with integer out.
Int clear_denominators(const std::vector<Scalar>& v, std::vector<Int>& out) {
    Int d = 1;
    for (const Scalar& c : v)
        d = lcm(d, denominator(c));
    out.resize(v.size());
    for (size_t m = 0; m < v.size(); ++m)
        out[m] = numerator(v[m]) * (d / denominator(v[m]));
    return d;
}

}  // namespace

Element mul(const Element& x, const Element& y) {
    require_same(x, y);
    const Algebra& a = *x.algebra;
    int dim = a.dim();
    std::vector<Scalar> out(dim);
    const Algebra::Mono* mono = a.mono_table();
    if (mono) {
        // integer accumulation; one normalization per output coefficient
        std::vector<Int> xi, yj, acc(dim);
        Int dx = clear_denominators(x.coeffs, xi);
        Int dy = clear_denominators(y.coeffs, yj);
        for (int i = 0; i < dim; ++i) {
            if (xi[i] == 0)
                continue;
            for (int j = 0; j < dim; ++j) {
                if (yj[j] == 0)
                    continue;
                const Algebra::Mono& m = mono[static_cast<size_t>(i) * dim + j];
                if (m.idx < 0)
                    continue;
                if (m.scaled == 1)
                    acc[m.idx] += xi[i] * yj[j];
                else if (m.scaled == -1)
                    acc[m.idx] -= xi[i] * yj[j];
                else
                    acc[m.idx] += xi[i] * yj[j] * m.scaled;
            }
        }
        Int den = dx * dy * a.mono_denominator();
        for (int r = 0; r < dim; ++r)
            if (acc[r] != 0)
                out[r] = Scalar(acc[r], den);
        return Element{x.algebra, std::move(out)};
    }
    for (int i = 0; i < dim; ++i) {
        const Scalar& ci = x.coeffs[i];
        if (ci == 0)
            continue;
        for (int j = 0; j < dim; ++j) {
            const Scalar& cj = y.coeffs[j];
            if (cj == 0)
                continue;
            Scalar f = ci * cj;
            const auto& entry = a.table(i, j);
            for (int r = 0; r < dim; ++r)
                if (entry[r] != 0)
                    out[r] += f * entry[r];
        }
    }
    return Element{x.algebra, std::move(out)};
}

Element operator*(const Element& x, const Element& y) { return mul(x, y); }

bool operator==(const Element& x, const Element& y) {
    return x.algebra == y.algebra && x.coeffs == y.coeffs;
}

Element associator(const Element& x, const Element& y, const Element& z) {
    return mul(mul(x, y), z) - mul(x, mul(y, z));
}

Element commutator(const Element& x, const Element& y) {
    return mul(x, y) - mul(y, x);
}

Element apply(const Involution& inv, const Element& x) {
    if (inv.algebra != x.algebra)
        throw AlgebraMismatch("involution belongs to a different algebra");
    return Element{x.algebra, mat_vec(inv.matrix, x.coeffs)};
}

Element conjugate(const Element& x) {
    return apply(x.algebra->conjugation(), x);
}

namespace {

Scalar scalar_part_or_throw(const Element& x, const char* what) {
    for (size_t m = 1; m < x.coeffs.size(); ++m)
        if (x.coeffs[m] != 0)
            throw NotScalar(std::string(what) + " is not a scalar: " + to_string(x));
    return x.coeffs[0];
}

}  // namespace

Scalar trace(const Element& x) {
    return scalar_part_or_throw(x + conjugate(x), "x + x*");
}

Scalar norm(const Element& x) {
    return scalar_part_or_throw(mul(x, conjugate(x)), "x x*");
}

CheckResult check_involution(const Involution& inv) {
    CheckResult res;
    const Algebra& a = *inv.algebra;
    int dim = a.dim();
    Matrix sq = inv.matrix * inv.matrix;
    ++res.checks;
    if (!(sq == Matrix::identity(dim))) {
        res.pass = false;
        res.detail = "matrix^2 is not the identity";
        return res;
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Element bi = a.basis_element(i), bj = a.basis_element(j);
            Element lhs = apply(inv, mul(bi, bj));
            Element rhs = inv.kind == InvolutionKind::automorphism
                              ? mul(apply(inv, bi), apply(inv, bj))
                              : mul(apply(inv, bj), apply(inv, bi));
            ++res.checks;
            if (!(lhs == rhs)) {
                res.pass = false;
                res.detail = "fails on pair (" + a.basis_names()[i] + ", " + a.basis_names()[j] +
                             "): phi(xy) = " + to_string(lhs) + ", expected " + to_string(rhs);
                return res;
            }
        }
    }
    return res;
}

std::string to_string(const Element& x) {
    const auto& names = x.algebra->basis_names();
    std::ostringstream out;
    bool first = true;
    for (size_t m = 0; m < x.coeffs.size(); ++m) {
        const Scalar& c = x.coeffs[m];
        if (c == 0)
            continue;
        Scalar mag = c < 0 ? Scalar(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (m == 0)
            out << format_scalar(mag);
        else if (mag == 1)
            out << names[m];
        else
            out << format_scalar(mag) << names[m];
    }
    if (first)
        return "0";
    return out.str();
}

}  // namespace kingdon
