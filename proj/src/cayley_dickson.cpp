#include "kingdon/cayley_dickson.hpp"

#include "kingdon/errors.hpp"
#include "kingdon/random.hpp"

namespace kingdon {

AlgebraPtr base_field() {
    std::vector<std::vector<Scalar>> table = {{Scalar(1)}};
    return Algebra::create("F", {"1"}, std::move(table), Matrix::identity(1));
}

AlgebraPtr cd_double(const AlgebraPtr& a, const Scalar& gamma, const std::string& gen_name) {
    if (!a->has_conjugation())
        throw InvalidConjugation("cd_double: input algebra carries no conjugation");
    CheckResult conj_ok = check_involution(a->conjugation());
    if (!conj_ok.pass)
        throw InvalidConjugation("cd_double: conjugation of '" + a->name() +
                                 "' is not an involutory anti-automorphism: " + conj_ok.detail);

    int d = a->dim();
    int dim = 2 * d;
    const Matrix& c = a->conjugation().matrix;

    std::vector<std::string> names;
    names.reserve(dim);
    for (const auto& n : a->basis_names())
        names.push_back(n);
    for (const auto& n : a->basis_names())
        names.push_back(n == "1" ? gen_name : n + gen_name);

    auto at = [&](std::vector<Scalar>& out, int half, const std::vector<Scalar>& part) {
        for (int m = 0; m < d; ++m)
            out[half * d + m] += part[m];
    };

    std::vector<std::vector<Scalar>> table(static_cast<size_t>(dim) * dim,
                                           std::vector<Scalar>(dim));
    for (int u = 0; u < dim; ++u) {
        for (int v = 0; v < dim; ++v) {
            std::vector<Scalar>& out = table[static_cast<size_t>(u) * dim + v];
            if (u < d && v < d) {
                at(out, 0, a->table(u, v));  // (ac, 0)
            } else if (u < d && v >= d) {
                at(out, 1, a->table(v - d, u));  // (0, da)
            } else if (u >= d && v < d) {
                // (0, b c*): c* expanded in the basis via the conjugation matrix
                for (int m = 0; m < d; ++m) {
                    const Scalar& cm = c(m, v);
                    if (cm == 0)
                        continue;
                    const auto& prod = a->table(u - d, m);
                    for (int r = 0; r < d; ++r)
                        out[d + r] += cm * prod[r];
                }
            } else {
                // (gamma d* b, 0)
                if (gamma != 0) {
                    for (int m = 0; m < d; ++m) {
                        const Scalar& cm = c(m, v - d);
                        if (cm == 0)
                            continue;
                        const auto& prod = a->table(m, u - d);
                        for (int r = 0; r < d; ++r)
                            out[r] += gamma * cm * prod[r];
                    }
                }
            }
        }
    }

    Matrix conj(dim, dim);
    for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s)
            conj(r, s) = c(r, s);
    for (int r = 0; r < d; ++r)
        conj(d + r, d + r) = -1;

    return Algebra::create(a->name() + "^" + format_scalar(gamma), std::move(names),
                           std::move(table), std::move(conj));
}

AlgebraPtr cd_tower(const std::vector<Scalar>& gammas) {
    if (gammas.size() > 4)
        throw TowerTooTall("cd_tower: at most four doublings (dim 16)");
    static const char* gen[4] = {"i", "j", "k", "l"};
    AlgebraPtr a = base_field();
    for (size_t t = 0; t < gammas.size(); ++t)
        a = cd_double(a, gammas[t], gen[t]);
    return a;
}

AlgebraPtr relabel(const AlgebraPtr& a, const std::vector<int>& perm,
                   const std::vector<int>& signs, std::vector<std::string> names,
                   std::string name) {
    int dim = a->dim();
    if (static_cast<int>(perm.size()) != dim || static_cast<int>(signs.size()) != dim ||
        static_cast<int>(names.size()) != dim)
        throw Error("relabel: wrong permutation size");
    std::vector<std::vector<Scalar>> table(static_cast<size_t>(dim) * dim);
    for (int m = 0; m < dim; ++m) {
        for (int n = 0; n < dim; ++n) {
            const auto& old = a->table(perm[m], perm[n]);
            std::vector<Scalar> entry(dim);
            for (int r = 0; r < dim; ++r)
                entry[r] = Scalar(signs[m] * signs[n] * signs[r]) * old[perm[r]];
            table[static_cast<size_t>(m) * dim + n] = std::move(entry);
        }
    }
    std::optional<Matrix> conj;
    if (a->has_conjugation()) {
        const Matrix& c = a->conjugation().matrix;
        Matrix nc(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int s = 0; s < dim; ++s)
                nc(r, s) = Scalar(signs[r] * signs[s]) * c(perm[r], perm[s]);
        conj = std::move(nc);
    }
    return Algebra::create(std::move(name), std::move(names), std::move(table), std::move(conj));
}

AlgebraPtr cd_relabel_to_kingdon_basis(const AlgebraPtr& tower8) {
    if (tower8->dim() != 8)
        throw Error("expected an eight-dimensional tower");
    // tower order {1,i,j,ij,k,ik,jk,(ij)k} -> {1,i,j,k,ij,jk,ki,ω}, ki = -ik
    std::vector<int> perm = {0, 1, 2, 4, 3, 6, 5, 7};
    std::vector<int> signs = {1, 1, 1, 1, 1, 1, -1, 1};
    std::vector<std::string> names = {"1", "i", "j", "k", "ij", "jk", "ki", "ω"};
    return relabel(tower8, perm, signs, std::move(names), tower8->name() + " (kingdon basis)");
}

PropertyTriple algebra_properties(const AlgebraPtr& a) {
    PropertyTriple p{true, true, true};
    int dim = a->dim();
    std::vector<Element> basis;
    basis.reserve(dim);
    for (int m = 0; m < dim; ++m)
        basis.push_back(a->basis_element(m));

    for (int i = 0; i < dim && p.commutative; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (!(a->table(i, j) == a->table(j, i))) {
                p.commutative = false;
                break;
            }

    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                Element as = associator(basis[i], basis[j], basis[k]);
                if (p.associative && !as.is_zero())
                    p.associative = false;
                if (p.alternative) {
                    // transpositions (1 2) and (2 3) generate the alternating law
                    Element sw12 = associator(basis[j], basis[i], basis[k]);
                    Element sw23 = associator(basis[i], basis[k], basis[j]);
                    if (!(sw12 == -as) || !(sw23 == -as))
                        p.alternative = false;
                }
                if (!p.associative && !p.alternative)
                    return p;
            }
    return p;
}

bool conjugation_is_trivial(const AlgebraPtr& a) {
    return a->conjugation().matrix == Matrix::identity(a->dim());
}

LadderReport property_ladder(const AlgebraPtr& a, const Scalar& gamma) {
    LadderReport r;
    r.base = algebra_properties(a);
    r.base_conjugation_trivial = conjugation_is_trivial(a);
    r.doubled = algebra_properties(cd_double(a, gamma, "t"));
    return r;
}

CheckResult cd_trace_norm_check(const AlgebraPtr& doubled, const AlgebraPtr& base,
                                const Scalar& gamma, int random_pairs, uint64_t seed) {
    CheckResult res;
    int d = base->dim();
    if (doubled->dim() != 2 * d)
        throw Error("cd_trace_norm_check: dimension mismatch");

    auto pair_element = [&](const Element& x, const Element& y) {
        std::vector<Scalar> c(static_cast<size_t>(2) * d);
        for (int m = 0; m < d; ++m) {
            c[m] = x.coeffs[m];
            c[d + m] = y.coeffs[m];
        }
        return doubled->element(std::move(c));
    };

    auto check_pair = [&](const Element& x, const Element& y) {
        Element ab = pair_element(x, y);
        Scalar t_want = trace(x), n_want = norm(x) - gamma * norm(y);
        ++res.checks;
        if (trace(ab) != t_want || norm(ab) != n_want) {
            res.pass = false;
            res.detail = "fails at (a,b) with a = " + to_string(x) + ", b = " + to_string(y);
            return false;
        }
        return true;
    };

    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!check_pair(base->basis_element(i), base->basis_element(j)))
                return res;
    Rng rng(seed);
    for (int t = 0; t < random_pairs; ++t)
        if (!check_pair(rng.element(base), rng.element(base)))
            return res;
    return res;
}

}  // namespace kingdon
