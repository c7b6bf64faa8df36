#include "kingdon/kingdon.hpp"

#include "kingdon/errors.hpp"

#include <bit>

namespace kingdon {

FormedSpace FormedSpace::from_gram(const Matrix& gram) {
    if (gram.rows() != gram.cols())
        throw NonSymmetric("gram matrix must be square");
    if (gram.rows() > 3)
        throw DimensionTooLarge("formed spaces of dimension > 3 are not supported");
    FormedSpace fs;
    fs.dim = gram.rows();
    fs.gram = gram;
    Congruence c = congruence_diagonalize(gram);
    fs.p = c.p;
    fs.p_inv = inverse(c.p);
    fs.diag.resize(fs.dim);
    for (int h = 0; h < fs.dim; ++h)
        fs.diag[h] = c.d(h, h);
    return fs;
}

FormedSpace FormedSpace::from_diagonal(const std::vector<Scalar>& d) {
    return from_gram(Matrix::diagonal(d));
}

Scalar FormedSpace::form(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
    if (static_cast<int>(u.size()) != dim || static_cast<int>(v.size()) != dim)
        throw Error("form: wrong coordinate length");
    Scalar s = 0;
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            if (gram(r, c) != 0)
                s += u[r] * gram(r, c) * v[c];
    return s;
}

namespace {

// Quantized product table on {1,i,j,k,ij,jk,ki,ω}: each non-unit product is
// sign * (product of the Q values in qmask) * basis[idx].
// qmask bits: 1 = Q(i), 2 = Q(j), 4 = Q(k).
struct QuantEntry {
    int sign;
    unsigned qmask;
    int idx;
};

// rows/cols run over i,j,k,ij,jk,ki,ω (basis indices 1..7)
constexpr QuantEntry kQuantTable[7][7] = {
    {{+1, 1, 0}, {+1, 0, 4}, {-1, 0, 6}, {+1, 1, 2}, {-1, 0, 7}, {-1, 1, 3}, {-1, 1, 5}},
    {{-1, 0, 4}, {+1, 2, 0}, {+1, 0, 5}, {-1, 2, 1}, {+1, 2, 3}, {-1, 0, 7}, {-1, 2, 6}},
    {{+1, 0, 6}, {-1, 0, 5}, {+1, 4, 0}, {-1, 0, 7}, {-1, 4, 2}, {+1, 4, 1}, {-1, 4, 4}},
    {{-1, 1, 2}, {+1, 2, 1}, {+1, 0, 7}, {-1, 3, 0}, {+1, 2, 6}, {-1, 1, 5}, {-1, 3, 3}},
    {{+1, 0, 7}, {-1, 2, 3}, {+1, 4, 2}, {-1, 2, 6}, {-1, 6, 0}, {+1, 4, 4}, {-1, 6, 1}},
    {{+1, 1, 3}, {+1, 0, 7}, {-1, 4, 1}, {+1, 1, 5}, {-1, 4, 4}, {-1, 5, 0}, {-1, 5, 2}},
    {{+1, 1, 5}, {+1, 2, 6}, {+1, 4, 4}, {+1, 3, 3}, {+1, 6, 1}, {+1, 5, 2}, {+1, 7, 0}},
};

Scalar qmask_value(const std::vector<Scalar>& q, unsigned mask) {
    Scalar v = 1;
    for (int h = 0; h < 3; ++h)
        if (mask & (1u << h))
            v *= q[h];
    return v;
}

std::vector<std::vector<Scalar>> quantized_table(const std::vector<Scalar>& q) {
    std::vector<std::vector<Scalar>> table(64, std::vector<Scalar>(8));
    for (int m = 0; m < 8; ++m) {
        table[static_cast<size_t>(0) * 8 + m][m] = 1;
        table[static_cast<size_t>(m) * 8 + 0][m] = 1;
    }
    for (int r = 1; r < 8; ++r)
        for (int c = 1; c < 8; ++c) {
            const QuantEntry& e = kQuantTable[r - 1][c - 1];
            table[static_cast<size_t>(r) * 8 + c][e.idx] = Scalar(e.sign) * qmask_value(q, e.qmask);
        }
    return table;
}

// Associative Clifford basis product for dim < 3; basis index = generator
// bitmask, e_h^2 = Q(e_h), distinct generators anticommute.
std::pair<Scalar, int> blade_mul(unsigned a, unsigned b, const std::vector<Scalar>& q) {
    Scalar coeff = 1;
    int sgn = 1;
    unsigned acc = a;
    for (unsigned g = 0; g < 8; ++g) {
        if (!(b & (1u << g)))
            continue;
        unsigned higher = acc >> (g + 1);
        if (std::popcount(higher) % 2 == 1)
            sgn = -sgn;
        if (acc & (1u << g)) {
            coeff *= q[g];
            acc &= ~(1u << g);
        } else {
            acc |= (1u << g);
        }
    }
    return {Scalar(sgn) * coeff, static_cast<int>(acc)};
}

std::vector<std::string> clifford_names(int dim_v) {
    static const char* gen[3] = {"i", "j", "k"};
    int dim = 1 << dim_v;
    std::vector<std::string> names(dim);
    for (int m = 0; m < dim; ++m) {
        std::string n;
        for (int h = 0; h < dim_v; ++h)
            if (m & (1 << h))
                n += gen[h];
        names[m] = n.empty() ? "1" : n;
    }
    return names;
}

std::string signature_name(const std::vector<Scalar>& diag) {
    SignCounts s = diagonal_signs(Matrix::diagonal(diag));
    return "K(" + std::to_string(s.zero) + "," + std::to_string(s.positive) + "," +
           std::to_string(s.negative) + ")";
}

}  // namespace

KingdonAlgebra build_kingdon(const FormedSpace& fs) {
    if (fs.dim > 3)
        throw DimensionTooLarge("Kingdon algebras over dim(V) > 3 are out of range");

    KingdonAlgebra ka;
    ka.space = fs;
    ka.q.resize(fs.dim);
    for (int h = 0; h < fs.dim; ++h)
        ka.q[h] = fs.diag[h] / 2;

    int dim = 1 << fs.dim;
    std::vector<std::string> names;
    std::vector<std::vector<Scalar>> table;
    std::vector<int> grade(dim);

    if (fs.dim == 3) {
        names = {"1", "i", "j", "k", "ij", "jk", "ki", "ω"};
        table = quantized_table(ka.q);
        grade = {0, 1, 1, 1, 2, 2, 2, 3};
        ka.omega_index = 7;
    } else {
        names = clifford_names(fs.dim);
        table.assign(static_cast<size_t>(dim) * dim, std::vector<Scalar>(dim));
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) {
                auto [c, idx] = blade_mul(static_cast<unsigned>(a), static_cast<unsigned>(b), ka.q);
                table[static_cast<size_t>(a) * dim + b][idx] = c;
            }
        for (int m = 0; m < dim; ++m)
            grade[m] = std::popcount(static_cast<unsigned>(m));
    }

    Matrix nu_m(dim, dim), kappa_m(dim, dim);
    for (int m = 0; m < dim; ++m) {
        nu_m(m, m) = (grade[m] % 2 == 0) ? 1 : -1;
        int g = grade[m];
        if (fs.dim == 3)
            kappa_m(m, m) = (m == 0) ? 1 : -1;
        else
            kappa_m(m, m) = ((g * (g + 1) / 2) % 2 == 0) ? 1 : -1;
    }

    ka.algebra = Algebra::create(signature_name(fs.diag), std::move(names), std::move(table),
                                 kappa_m);
    ka.nu = Involution{ka.algebra, std::move(nu_m), InvolutionKind::automorphism};
    ka.kappa = ka.algebra->conjugation();
    return ka;
}

Element KingdonAlgebra::vector_element(const std::vector<Scalar>& input_coords) const {
    std::vector<Scalar> diag_coords = mat_vec(space.p_inv, input_coords);
    std::vector<Scalar> coeffs(algebra->dim());
    for (int h = 0; h < space.dim; ++h) {
        int idx = (space.dim == 3) ? h + 1 : (1 << h);
        coeffs[idx] = diag_coords[h];
    }
    return algebra->element(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// words

struct Word::Node {
    std::vector<Scalar> coords;  // leaf payload
    std::shared_ptr<const Node> l, r;
    int leaves = 1;
    bool leaf() const { return !l; }
};

Word Word::vec(std::vector<Scalar> input_coords) {
    auto n = std::make_shared<Node>();
    n->coords = std::move(input_coords);
    Word w;
    w.node_ = std::move(n);
    return w;
}

Word Word::prod(const Word& l, const Word& r) {
    auto n = std::make_shared<Node>();
    n->l = l.node_;
    n->r = r.node_;
    n->leaves = l.node_->leaves + r.node_->leaves;
    Word w;
    w.node_ = std::move(n);
    return w;
}

bool Word::is_leaf() const { return node_->leaf(); }
int Word::leaf_count() const { return node_->leaves; }
const std::vector<Scalar>& Word::coords() const { return node_->coords; }
Word Word::left() const {
    Word w;
    w.node_ = node_->l;
    return w;
}
Word Word::right() const {
    Word w;
    w.node_ = node_->r;
    return w;
}

namespace {

// product tree over single generators
struct GTree {
    int gen = -1;
    std::shared_ptr<const GTree> l, r;
    int leaves = 1;
};
using GTreePtr = std::shared_ptr<const GTree>;

GTreePtr gleaf(int g) {
    auto t = std::make_shared<GTree>();
    t->gen = g;
    return t;
}

GTreePtr gnode(GTreePtr l, GTreePtr r) {
    auto t = std::make_shared<GTree>();
    t->leaves = l->leaves + r->leaves;
    t->l = std::move(l);
    t->r = std::move(r);
    return t;
}

struct WordNodeView {
    const std::vector<Scalar>* coords;
};

// multilinear expansion of the word into generator monomials, leaves already
// in diagonal coordinates
void expand(const Word& w, const KingdonAlgebra& ka,
            std::vector<std::pair<Scalar, GTreePtr>>& out) {
    if (w.is_leaf()) {
        std::vector<Scalar> c = mat_vec(ka.space.p_inv, w.coords());
        for (int h = 0; h < ka.space.dim; ++h)
            if (c[h] != 0)
                out.emplace_back(c[h], gleaf(h));
        return;
    }
    std::vector<std::pair<Scalar, GTreePtr>> ls, rs;
    expand(w.left(), ka, ls);
    expand(w.right(), ka, rs);
    for (const auto& [cl, tl] : ls)
        for (const auto& [cr, tr] : rs)
            out.emplace_back(cl * cr, gnode(tl, tr));
}

int perm_sign3(int a, int b, int c) {
    // parity of (a,b,c) as a permutation of (0,1,2)
    int inv = (a > b) + (a > c) + (b > c);
    return inv % 2 == 0 ? 1 : -1;
}

class WordReducer {
public:
    explicit WordReducer(const KingdonAlgebra& ka) : ka_(ka) {}

    Element reduce(const GTreePtr& t) {
        if (t->leaves == 1)
            return vec_basis(t->gen, Scalar(1));
        if (t->leaves == 2)
            return pair_product(t->l->gen, t->r->gen);
        if (t->leaves == 3) {
            if (t->l->leaves == 2)
                return left_normed(t->l->l->gen, t->l->r->gen, t->r->gen);
            return right_normed(t->l->gen, t->r->l->gen, t->r->r->gen);
        }
        // longer words: collapse the subtrees, finish through the table
        return mul(reduce(t->l), reduce(t->r));
    }

private:
    Element vec_basis(int h, const Scalar& c) {
        std::vector<Scalar> coeffs(ka_.algebra->dim());
        int idx = (ka_.space.dim == 3) ? h + 1 : (1 << h);
        coeffs[idx] = c;
        return ka_.algebra->element(std::move(coeffs));
    }

    Element scalar(const Scalar& c) { return ka_.algebra->scalar_element(c); }

    // e_a e_b via the Clifford relation: a == b gives Q(a); distinct
    // orthogonal generators anticommute onto the canonical pair element.
    Element pair_product(int a, int b) {
        if (a == b)
            return scalar(ka_.q[a]);
        std::vector<Scalar> coeffs(ka_.algebra->dim());
        if (ka_.space.dim == 3) {
            static constexpr int pair_idx[3][3] = {{0, 4, 6}, {4, 0, 5}, {6, 5, 0}};
            static constexpr int pair_sgn[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
            coeffs[pair_idx[a][b]] = pair_sgn[a][b];
        } else {
            coeffs[(1 << a) | (1 << b)] = (a < b) ? 1 : -1;
        }
        return ka_.algebra->element(std::move(coeffs));
    }

    // (e_a e_b) e_c, justified case by case:
    //   a == b : (aa)c = Q(a) c
    //   b == c : (ab)b = a(bb) = Q(b) a          (right alternative law)
    //   a == c : (ab)a = -Q(a) b                 (flexible law + rebracketing)
    //   distinct: sgn(abc) (ij)k = sgn(abc) ω    (Clifford swaps to the
    //                                             canonical order)
    Element left_normed(int a, int b, int c) {
        if (a == b)
            return vec_basis(c, ka_.q[a]);
        if (b == c)
            return vec_basis(a, ka_.q[b]);
        if (a == c)
            return vec_basis(b, -ka_.q[a]);
        std::vector<Scalar> coeffs(ka_.algebra->dim());
        coeffs[ka_.omega_index] = perm_sign3(a, b, c);
        return ka_.algebra->element(std::move(coeffs));
    }

    // a(bc) = -(ab)c + a B(b,c) - b B(c,a) + c B(a,b) with B diagonal
    Element right_normed(int a, int b, int c) {
        Element r = -left_normed(a, b, c);
        if (b == c)
            r = r + vec_basis(a, 2 * ka_.q[b]);
        if (c == a)
            r = r - vec_basis(b, 2 * ka_.q[c]);
        if (a == b)
            r = r + vec_basis(c, 2 * ka_.q[a]);
        return r;
    }

    const KingdonAlgebra& ka_;
};

}  // namespace

Element reduce_word(const Word& w, const KingdonAlgebra& ka) {
    std::vector<std::pair<Scalar, GTreePtr>> monomials;
    expand(w, ka, monomials);
    WordReducer red(ka);
    Element acc = ka.algebra->zero();
    for (const auto& [c, t] : monomials)
        acc = acc + c * red.reduce(t);
    return acc;
}

CheckResult forms_of_omega_check(const KingdonAlgebra& ka) {
    if (ka.dim_v() != 3)
        throw Error("forms_of_omega_check needs dim(V) = 3");
    CheckResult res;

    // diagonal basis vectors in input coordinates: columns of p
    std::vector<Word> v;
    for (int h = 0; h < 3; ++h) {
        std::vector<Scalar> col(3);
        for (int r = 0; r < 3; ++r)
            col[r] = ka.space.p(r, h);
        v.push_back(Word::vec(std::move(col)));
    }
    auto L = [&](int a, int b, int c) { return Word::prod(Word::prod(v[a], v[b]), v[c]); };
    auto R = [&](int a, int b, int c) { return Word::prod(v[a], Word::prod(v[b], v[c])); };

    const int I = 0, J = 1, K = 2;
    struct Form {
        Word w;
        int sign;
        const char* text;
    };
    std::vector<Form> forms = {
        {L(I, J, K), +1, "(ij)k"},  {L(J, K, I), +1, "(jk)i"},  {L(K, I, J), +1, "(ki)j"},
        {R(I, J, K), -1, "-i(jk)"}, {R(J, K, I), -1, "-j(ki)"}, {R(K, I, J), -1, "-k(ij)"},
        {R(I, K, J), +1, "i(kj)"},  {R(J, I, K), +1, "j(ik)"},  {R(K, J, I), +1, "k(ji)"},
        {L(I, K, J), -1, "-(ik)j"}, {L(J, I, K), -1, "-(ji)k"}, {L(K, J, I), -1, "-(kj)i"},
    };

    Element omega = ka.algebra->basis_element(ka.omega_index);
    for (const auto& f : forms) {
        Element val = Scalar(f.sign) * reduce_word(f.w, ka);
        ++res.checks;
        if (!(val == omega)) {
            res.pass = false;
            res.detail = std::string(f.text) + " = " + to_string(val) + ", expected " +
                         to_string(omega);
            return res;
        }
    }
    return res;
}

AdmissibleTriples admissible_triples(const KingdonAlgebra& ka) {
    if (ka.dim_v() != 3)
        throw NotOctonions("admissible triples need dim(V) = 3");
    for (const Scalar& qh : ka.q)
        if (qh != -1)
            throw NotOctonions("admissible triples are defined on the octonions (all Q = -1)");

    AdmissibleTriples out;
    // 1,i,j,k,ij,jk,ki,ω = 0..7; the even line is oriented ij -> ki -> jk
    const std::array<std::array<int, 3>, 7> lines = {{
        {1, 2, 4},  // (i, j, ij)
        {2, 3, 5},  // (j, k, jk)
        {3, 1, 6},  // (k, i, ki)
        {1, 7, 5},  // (i, ω, jk)
        {2, 7, 6},  // (j, ω, ki)
        {3, 7, 4},  // (k, ω, ij)
        {4, 6, 5},  // (ij, ki, jk)
    }};
    for (const auto& line : lines)
        for (int s = 0; s < 3; ++s)
            out.triples.push_back({line[s], line[(s + 1) % 3], line[(s + 2) % 3]});

    const auto& names = ka.algebra->basis_names();
    for (const auto& [x, y, z] : out.triples) {
        Element ex = ka.algebra->basis_element(x);
        Element ey = ka.algebra->basis_element(y);
        Element ez = ka.algebra->basis_element(z);
        Element xy = mul(ex, ey), yx = mul(ey, ex);
        out.verdict.checks += 2;
        if (!(xy == ez) || !(yx == -ez)) {
            out.verdict.pass = false;
            out.verdict.detail = "triple (" + names[x] + "," + names[y] + "," + names[z] +
                                 "): xy = " + to_string(xy) + ", yx = " + to_string(yx);
            return out;
        }
    }
    return out;
}

CheckResult grading_check(const KingdonAlgebra& ka) {
    if (ka.dim_v() != 3)
        throw Error("grading_check needs dim(V) = 3");
    CheckResult res;
    // parity by basis index: even {1,ij,jk,ki}, odd {i,j,k,ω}
    auto parity = [](int m) { return (m == 0 || m == 4 || m == 5 || m == 6) ? 0 : 1; };
    const auto& names = ka.algebra->basis_names();
    for (int m = 0; m < 8; ++m)
        for (int n = 0; n < 8; ++n) {
            int want = parity(m) ^ parity(n);
            const auto& entry = ka.algebra->table(m, n);
            ++res.checks;
            for (int r = 0; r < 8; ++r)
                if (entry[r] != 0 && parity(r) != want) {
                    res.pass = false;
                    res.detail = "product " + names[m] + "·" + names[n] +
                                 " leaves its grading component";
                    return res;
                }
        }
    for (int m = 0; m < 8; ++m) {
        Element want = Scalar(parity(m) == 0 ? 1 : -1) * ka.algebra->basis_element(m);
        ++res.checks;
        if (!(apply(ka.nu, ka.algebra->basis_element(m)) == want)) {
            res.pass = false;
            res.detail = "nu acts wrongly on " + names[m];
            return res;
        }
    }
    return res;
}

std::vector<Scalar> norm_form_coefficients(const std::vector<Scalar>& q) {
    if (q.size() != 3)
        throw Error("norm form coefficients need dim(V) = 3");
    return {Scalar(1), -q[0],       -q[1],       -q[2],
            q[0] * q[1], q[1] * q[2], q[2] * q[0], -q[0] * q[1] * q[2]};
}

Scalar kingdon_norm(const KingdonAlgebra& ka, const Element& x) {
    if (ka.dim_v() != 3)
        throw Error("kingdon_norm needs dim(V) = 3");
    if (x.algebra != ka.algebra)
        throw AlgebraMismatch("element of a different algebra");
    std::vector<Scalar> c = norm_form_coefficients(ka.q);
    Scalar n = 0;
    for (int m = 0; m < 8; ++m)
        if (x.coeffs[m] != 0)
            n += c[m] * x.coeffs[m] * x.coeffs[m];
    return n;
}

}  // namespace kingdon
