#include "kingdon/checks.hpp"

#include "kingdon/errors.hpp"

#include <functional>

namespace kingdon {

CheckResult check_alternativity(const AlgebraPtr& a) {
    CheckResult res;
    int dim = a->dim();
    std::vector<Element> basis;
    for (int m = 0; m < dim; ++m)
        basis.push_back(a->basis_element(m));
    const auto& names = a->basis_names();
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                Element as = associator(basis[i], basis[j], basis[k]);
                Element sw12 = associator(basis[j], basis[i], basis[k]);
                Element sw23 = associator(basis[i], basis[k], basis[j]);
                res.checks += 2;
                if (!(sw12 == -as) || !(sw23 == -as)) {
                    res.pass = false;
                    res.detail = "associator is not alternating at (" + names[i] + "," + names[j] +
                                 "," + names[k] + ")";
                    return res;
                }
            }
    return res;
}

CheckResult check_moufang(const AlgebraPtr& a, int samples, uint64_t seed) {
    CheckResult res;
    Rng rng(seed);
    for (int t = 0; t < samples; ++t) {
        Element x = rng.element(a), y = rng.element(a), z = rng.element(a);
        Element yz = mul(y, z);
        Element lhs = mul(mul(x, yz), x);
        Element mid = mul(x, mul(yz, x));
        Element rhs = mul(mul(x, y), mul(z, x));
        res.checks += 2;
        if (!(lhs == mid) || !(lhs == rhs)) {
            res.pass = false;
            res.detail = "Moufang fails at sample " + std::to_string(t) + ": x = " + to_string(x) +
                         ", y = " + to_string(y) + ", z = " + to_string(z);
            return res;
        }
    }
    return res;
}

namespace {

// all values of all bracketings of letters[lo..hi]
void bracketings(const std::vector<Element>& letters, int lo, int hi,
                 std::vector<std::vector<std::vector<Element>>>& memo) {
    // memo[lo][hi - lo] caches results
    auto& slot = memo[lo][hi - lo];
    if (!slot.empty())
        return;
    if (lo == hi) {
        slot = {letters[lo]};
        return;
    }
    for (int m = lo; m < hi; ++m) {
        bracketings(letters, lo, m, memo);
        bracketings(letters, m + 1, hi, memo);
        for (const Element& l : memo[lo][m - lo])
            for (const Element& r : memo[m + 1][hi - m - 1])
                slot.push_back(mul(l, r));
    }
}

}  // namespace

CheckResult check_diassociativity(const AlgebraPtr& a, int samples, uint64_t seed) {
    CheckResult res;
    Rng rng(seed);
    for (int t = 0; t < samples; ++t) {
        Element x = rng.element(a), y = rng.element(a);
        for (int len = 3; len <= 4; ++len) {
            for (unsigned pattern = 0; pattern < (1u << len); ++pattern) {
                std::vector<Element> letters;
                for (int p = 0; p < len; ++p)
                    letters.push_back((pattern >> p) & 1 ? y : x);
                std::vector<std::vector<std::vector<Element>>> memo(
                    len, std::vector<std::vector<Element>>(len));
                bracketings(letters, 0, len - 1, memo);
                const auto& vals = memo[0][len - 1];
                ++res.checks;
                for (const Element& v : vals)
                    if (!(v == vals[0])) {
                        res.pass = false;
                        res.detail = "bracketings of a length-" + std::to_string(len) +
                                     " word disagree at sample " + std::to_string(t) +
                                     ": x = " + to_string(x) + ", y = " + to_string(y);
                        return res;
                    }
            }
        }
    }
    return res;
}

CheckResult check_palindromic(const KingdonAlgebra& ka) {
    CheckResult res;
    int n = ka.dim_v();
    std::vector<Element> v;
    for (int h = 0; h < n; ++h) {
        std::vector<Scalar> col(n);
        for (int r = 0; r < n; ++r)
            col[r] = ka.space.p(r, h);
        v.push_back(ka.vector_element(col));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Element lhs = mul(mul(v[a], v[b]), v[c]);
                Element rhs = mul(v[c], mul(v[b], v[a]));
                ++res.checks;
                if (!(lhs == rhs)) {
                    res.pass = false;
                    res.detail = "(uv)w != w(vu) at basis triple (" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + ")";
                    return res;
                }
            }
    return res;
}

CheckResult check_clifford_relation(const KingdonAlgebra& ka) {
    CheckResult res;
    int n = ka.dim_v();
    auto unit_coords = [&](int h) {
        std::vector<Scalar> c(n);
        c[h] = 1;
        return c;
    };
    // input basis vectors, mapped through the change of basis
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Element u = ka.vector_element(unit_coords(a));
            Element v = ka.vector_element(unit_coords(b));
            Element lhs = mul(u, v) + mul(v, u);
            Element rhs = ka.algebra->scalar_element(ka.space.gram(a, b));
            ++res.checks;
            if (!(lhs == rhs)) {
                res.pass = false;
                res.detail = "uv + vu != B(u,v) at input basis pair (" + std::to_string(a) + "," +
                             std::to_string(b) + ")";
                return res;
            }
        }
    // diagonal basis vectors
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ia = (n == 3) ? a + 1 : (1 << a);
            int ib = (n == 3) ? b + 1 : (1 << b);
            Element u = ka.algebra->basis_element(ia);
            Element v = ka.algebra->basis_element(ib);
            Element lhs = mul(u, v) + mul(v, u);
            Scalar want = (a == b) ? Scalar(2 * ka.q[a]) : Scalar(0);
            ++res.checks;
            if (!(lhs == ka.algebra->scalar_element(want))) {
                res.pass = false;
                res.detail = "diagonal Clifford relation fails at (" + std::to_string(a) + "," +
                             std::to_string(b) + ")";
                return res;
            }
        }
    return res;
}

namespace {

CheckResult quadratic_at(const Element& x) {
    CheckResult res;
    ++res.checks;
    Scalar t = trace(x), n = norm(x);
    Element lhs = mul(x, x) - t * x + x.algebra->scalar_element(n);
    if (!lhs.is_zero()) {
        res.pass = false;
        res.detail = "x^2 - T(x)x + N(x) != 0 at x = " + to_string(x);
    }
    return res;
}

}  // namespace

CheckResult check_quadratic(const AlgebraPtr& a, int samples, uint64_t seed) {
    CheckResult res;
    for (int m = 0; m < a->dim(); ++m) {
        CheckResult r = quadratic_at(a->basis_element(m));
        res.checks += r.checks;
        if (!r.pass)
            return r;
    }
    Rng rng(seed);
    for (int t = 0; t < samples; ++t) {
        CheckResult r = quadratic_at(rng.element(a));
        res.checks += r.checks;
        if (!r.pass)
            return r;
    }
    return res;
}

CheckResult check_kingdon_norm_agreement(const KingdonAlgebra& ka, int samples, uint64_t seed) {
    CheckResult res;
    auto agree = [&](const Element& x) {
        ++res.checks;
        if (kingdon_norm(ka, x) != norm(x)) {
            res.pass = false;
            res.detail = "norm expansion disagrees with x x* at x = " + to_string(x);
            return false;
        }
        return true;
    };
    for (int m = 0; m < ka.algebra->dim(); ++m)
        if (!agree(ka.algebra->basis_element(m)))
            return res;
    Rng rng(seed);
    for (int t = 0; t < samples; ++t)
        if (!agree(rng.element(ka.algebra)))
            return res;
    return res;
}

CheckResult check_norm_multiplicative(const KingdonAlgebra& ka, int pairs, uint64_t seed) {
    CheckResult res;
    Rng rng(seed);
    for (int t = 0; t < pairs; ++t) {
        Element x = rng.element(ka.algebra), y = rng.element(ka.algebra);
        ++res.checks;
        if (kingdon_norm(ka, mul(x, y)) != kingdon_norm(ka, x) * kingdon_norm(ka, y)) {
            res.pass = false;
            res.detail = "N(xy) != N(x)N(y) at x = " + to_string(x) + ", y = " + to_string(y);
            return res;
        }
    }
    return res;
}

CheckResult check_reduce_word_agreement(const KingdonAlgebra& ka) {
    CheckResult res;
    int n = ka.dim_v();
    std::vector<Word> w;
    std::vector<Element> e;
    for (int h = 0; h < n; ++h) {
        std::vector<Scalar> col(n);
        for (int r = 0; r < n; ++r)
            col[r] = ka.space.p(r, h);
        w.push_back(Word::vec(col));
        e.push_back(ka.vector_element(col));
    }
    auto expect = [&](const Word& word, const Element& want, const std::string& what) {
        Element got = reduce_word(word, ka);
        ++res.checks;
        if (!(got == want)) {
            res.pass = false;
            res.detail = what + ": reduce_word gives " + to_string(got) + ", table gives " +
                         to_string(want);
            return false;
        }
        return true;
    };
    for (int a = 0; a < n; ++a) {
        if (!expect(w[a], e[a], "length 1"))
            return res;
        for (int b = 0; b < n; ++b) {
            if (!expect(Word::prod(w[a], w[b]), mul(e[a], e[b]), "length 2"))
                return res;
            for (int c = 0; c < n; ++c) {
                Element lhs = mul(mul(e[a], e[b]), e[c]);
                Element rhs = mul(e[a], mul(e[b], e[c]));
                if (!expect(Word::prod(Word::prod(w[a], w[b]), w[c]), lhs, "left-normed length 3"))
                    return res;
                if (!expect(Word::prod(w[a], Word::prod(w[b], w[c])), rhs,
                            "right-normed length 3"))
                    return res;
            }
        }
    }
    return res;
}

}  // namespace kingdon
