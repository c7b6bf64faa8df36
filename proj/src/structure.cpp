#include "kingdon/structure.hpp"

#include "kingdon/cayley_dickson.hpp"
#include "kingdon/errors.hpp"
#include "kingdon/random.hpp"

namespace kingdon {

namespace {

std::vector<Element> to_elements(const AlgebraPtr& a,
                                 const std::vector<std::vector<Scalar>>& vecs) {
    std::vector<Element> out;
    out.reserve(vecs.size());
    for (auto v : vecs)
        out.push_back(a->element(std::move(v)));
    return out;
}

}  // namespace

std::vector<Element> commutant_basis(const AlgebraPtr& a) {
    int dim = a->dim();
    Matrix constraints(dim * dim, dim);
    int row = 0;
    for (int i = 0; i < dim; ++i) {
        Element bi = a->basis_element(i);
        for (int n = 0; n < dim; ++n) {
            Element c = commutator(a->basis_element(n), bi);
            for (int r = 0; r < dim; ++r)
                constraints(row + r, n) = c.coeffs[r];
        }
        row += dim;
    }
    return to_elements(a, kernel_basis(constraints));
}

std::vector<Element> nucleus_basis(const AlgebraPtr& a) {
    int dim = a->dim();
    Matrix constraints(3 * dim * dim * dim, dim);
    int row = 0;
    for (int i = 0; i < dim; ++i) {
        Element bi = a->basis_element(i);
        for (int j = 0; j < dim; ++j) {
            Element bj = a->basis_element(j);
            for (int n = 0; n < dim; ++n) {
                Element bn = a->basis_element(n);
                Element slots[3] = {associator(bn, bi, bj), associator(bi, bn, bj),
                                    associator(bi, bj, bn)};
                for (int s = 0; s < 3; ++s)
                    for (int r = 0; r < dim; ++r)
                        constraints(row + s * dim + r, n) = slots[s].coeffs[r];
            }
            row += 3 * dim;
        }
    }
    return to_elements(a, kernel_basis(constraints));
}

std::vector<Element> center_basis(const AlgebraPtr& a) {
    int dim = a->dim();
    std::vector<Element> com = commutant_basis(a);
    std::vector<Element> nuc = nucleus_basis(a);
    // intersection of the two spans: kernel of [C | -N] glued column blocks
    int cc = static_cast<int>(com.size()), nc = static_cast<int>(nuc.size());
    Matrix m(dim, cc + nc);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < cc; ++c)
            m(r, c) = com[c].coeffs[r];
        for (int c = 0; c < nc; ++c)
            m(r, cc + c) = -nuc[c].coeffs[r];
    }
    std::vector<Element> out;
    for (const auto& k : kernel_basis(m)) {
        std::vector<Scalar> v(dim);
        for (int c = 0; c < cc; ++c)
            if (k[c] != 0)
                for (int r = 0; r < dim; ++r)
                    v[r] += k[c] * com[c].coeffs[r];
        Element e = a->element(std::move(v));
        if (!e.is_zero())
            out.push_back(std::move(e));
    }
    return out;
}

bool is_simple(const KingdonAlgebra& ka) {
    if (ka.dim_v() != 3)
        throw Error("is_simple needs dim(V) = 3");
    bool nondegenerate = determinant(ka.space.gram) != 0;
    bool norm_nondegenerate = true;
    for (const Scalar& c : norm_form_coefficients(ka.q))
        if (c == 0)
            norm_nondegenerate = false;
    if (nondegenerate != norm_nondegenerate)
        throw VerificationFailed("form nondegeneracy and norm nondegeneracy disagree");
    return nondegenerate;
}

std::optional<std::pair<Element, Element>> find_zero_divisor(const KingdonAlgebra& ka,
                                                             uint64_t seed) {
    if (ka.dim_v() != 3)
        throw Error("find_zero_divisor needs dim(V) = 3");
    const AlgebraPtr& a = ka.algebra;

    // tier 1: isotropic basis vector, e·e = Q(e) = 0
    for (int h = 0; h < 3; ++h)
        if (ka.q[h] == 0) {
            Element e = a->basis_element(h + 1);
            return std::make_pair(e, e);
        }

    // tier 2: Q(e) = s^2 > 0 with s rational: (1 - e/s)(1 + e/s) = 0
    for (int h = 0; h < 3; ++h) {
        if (ka.q[h] <= 0)
            continue;
        if (auto s = rational_sqrt(ka.q[h])) {
            Element e = (Scalar(1) / *s) * a->basis_element(h + 1);
            return std::make_pair(a->one() - e, a->one() + e);
        }
    }

    // tier 3: seeded search for a norm-zero element; x x* = N(x) = 0 pairs
    // x with its conjugate. The scalar coefficient is solved from the other
    // seven, which keeps every trial on the norm-zero quadric.
    std::vector<Scalar> c = norm_form_coefficients(ka.q);
    Rng rng(seed);
    for (int trial = 0; trial < 5000; ++trial) {
        std::vector<Scalar> v(8);
        Scalar rest = 0;
        for (int m = 1; m < 8; ++m) {
            v[m] = rng.small_scalar();
            rest += c[m] * v[m] * v[m];
        }
        auto a0 = rational_sqrt(-rest);
        if (!a0)
            continue;
        v[0] = *a0;
        Element x = a->element(std::move(v));
        if (x.is_zero())
            continue;
        Element y = conjugate(x);
        if (!y.is_zero() && mul(x, y).is_zero())
            return std::make_pair(std::move(x), std::move(y));
    }
    return std::nullopt;
}

std::string to_string(const Signature& s) {
    return "(" + std::to_string(s.b0) + "," + std::to_string(s.b1) + "," +
           std::to_string(s.bneg1) + ")";
}

Matrix canonical_gram(const Signature& s) {
    std::vector<Scalar> d;
    d.insert(d.end(), s.b0, Scalar(0));
    d.insert(d.end(), s.b1, Scalar(2));
    d.insert(d.end(), s.bneg1, Scalar(-2));
    return Matrix::diagonal(d);
}

Signature signature_of(const FormedSpace& fs) {
    Signature s;
    for (const Scalar& d : fs.diag) {
        int sg = sign_of(d);
        if (sg == 0)
            ++s.b0;
        else if (sg > 0)
            ++s.b1;
        else
            ++s.bneg1;
    }
    return s;
}

std::string iso_class_label(const Signature& s) {
    if (s.b0 + s.b1 + s.bneg1 != 3)
        throw Error("iso classes are defined for dim(V) = 3");
    if (s.b0 == 3)
        return "ALT_EXT";
    if (s.b0 == 2)
        return s.b1 == 1 ? "K(2,1,0)" : "K(2,0,1)";
    if (s.b0 == 1)
        return s.bneg1 == 2 ? "K(1,0,2)" : "K(1,1,1)~K(1,2,0)";
    return s.bneg1 == 3 ? "OCT" : "SPLIT_OCT";
}

Classification classify(const FormedSpace& fs) {
    if (fs.dim != 3)
        throw DimensionTooLarge("classify needs a 3-dimensional formed space");
    Signature s = signature_of(fs);
    return {s, iso_class_label(s)};
}

ExplicitIso explicit_iso_111_120() {
    ExplicitIso iso;
    iso.source = build_kingdon(FormedSpace::from_gram(canonical_gram({1, 1, 1})));
    iso.target = build_kingdon(FormedSpace::from_gram(canonical_gram({1, 2, 0})));

    // source generators v1, v2, v3 square to 0, 1, -1; target w1, w2, w3 to
    // 0, 1, 1. The basis map, with ki = -(v1 v3) and ω = (v1 v2)v3:
    //   1->1, v1->w1, v2->w2, v3->w2w3, v1v2->w1w2, v2v3->w3,
    //   ki->(w1w2)w3, ω->w3w1
    const int image[8] = {0, 1, 2, 5, 4, 3, 7, 6};
    Matrix m(8, 8);
    for (int col = 0; col < 8; ++col)
        m(image[col], col) = 1;

    const auto& names = iso.source.algebra->basis_names();
    auto phi = [&](const Element& x) { return iso.target.algebra->element(mat_vec(m, x.coeffs)); };
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Element bi = iso.source.algebra->basis_element(i);
            Element bj = iso.source.algebra->basis_element(j);
            Element lhs = phi(mul(bi, bj));
            Element rhs = mul(phi(bi), phi(bj));
            if (!(lhs == rhs))
                throw VerificationFailed("explicit isomorphism fails at (" + names[i] + ", " +
                                         names[j] + "): phi(xy) = " + to_string(lhs) +
                                         ", phi(x)phi(y) = " + to_string(rhs));
        }
    iso.map = std::move(m);
    return iso;
}

namespace {

// traceless scaled basis element with x^2 = sign, through the diagonal norm
// form: x = b_m / s with N(b_m) = c_m and s^2 = -sign * c_m
std::optional<Element> traceless_square_witness(const KingdonAlgebra& ka, int square_sign) {
    std::vector<Scalar> c = norm_form_coefficients(ka.q);
    for (int m = 1; m < 8; ++m) {
        Scalar target = Scalar(-square_sign) * c[m];
        if (target <= 0)
            continue;
        if (auto s = rational_sqrt(target))
            return (Scalar(1) / *s) * ka.algebra->basis_element(m);
    }
    return std::nullopt;
}

}  // namespace

std::optional<Element> split_complex_witness(const KingdonAlgebra& ka) {
    if (ka.dim_v() != 3)
        throw Error("split_complex_witness needs dim(V) = 3");
    return traceless_square_witness(ka, +1);
}

std::optional<std::pair<Element, Element>> split_quaternion_witness(const KingdonAlgebra& ka) {
    if (ka.dim_v() != 3)
        throw Error("split_quaternion_witness needs dim(V) = 3");
    std::vector<Scalar> c = norm_form_coefficients(ka.q);
    for (int m = 1; m < 8; ++m) {
        if (c[m] >= 0)
            continue;
        auto sm = rational_sqrt(-c[m]);
        if (!sm)
            continue;
        Element x = (Scalar(1) / *sm) * ka.algebra->basis_element(m);
        for (int n = 1; n < 8; ++n) {
            if (n == m || c[n] <= 0)
                continue;
            auto sn = rational_sqrt(c[n]);
            if (!sn)
                continue;
            Element y = (Scalar(1) / *sn) * ka.algebra->basis_element(n);
            if ((mul(x, y) + mul(y, x)).is_zero())
                return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

CheckResult kingdon_vs_tower(const KingdonAlgebra& ka) {
    if (ka.dim_v() != 3)
        throw Error("kingdon_vs_tower needs dim(V) = 3");
    CheckResult res;
    AlgebraPtr tower = cd_relabel_to_kingdon_basis(cd_tower(ka.q));
    const auto& names = ka.algebra->basis_names();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            ++res.checks;
            if (!(ka.algebra->table(i, j) == tower->table(i, j))) {
                res.pass = false;
                res.detail = "first differing entry at " + names[i] + "·" + names[j] +
                             ": kingdon " + to_string(ka.algebra->element(ka.algebra->table(i, j))) +
                             ", tower " + to_string(ka.algebra->element(tower->table(i, j)));
                return res;
            }
        }
    return res;
}

StructureReport structure_report(const FormedSpace& fs, uint64_t seed) {
    StructureReport rep;
    rep.cls = classify(fs);
    KingdonAlgebra ka = build_kingdon(fs);
    rep.simple = is_simple(ka);
    rep.commutant = commutant_basis(ka.algebra);
    rep.nucleus = nucleus_basis(ka.algebra);
    rep.center = center_basis(ka.algebra);
    rep.zero_divisor = find_zero_divisor(ka, seed);
    rep.division = !rep.zero_divisor.has_value();
    return rep;
}

}  // namespace kingdon
