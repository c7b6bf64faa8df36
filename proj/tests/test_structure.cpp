#include "kingdon/cayley_dickson.hpp"
#include "kingdon/checks.hpp"
#include "kingdon/errors.hpp"
#include "kingdon/structure.hpp"

#include <doctest.h>

#include <set>

using namespace kingdon;

namespace {

KingdonAlgebra canonical(int b0, int b1, int bneg1) {
    return build_kingdon(FormedSpace::from_gram(canonical_gram({b0, b1, bneg1})));
}

// span equality through row reduction
bool spans_basis_subset(const std::vector<Element>& basis, const std::set<int>& idx, int dim) {
    if (basis.size() != idx.size())
        return false;
    Matrix m(static_cast<int>(basis.size()) + static_cast<int>(idx.size()), dim);
    int row = 0;
    for (const Element& e : basis) {
        for (int c = 0; c < dim; ++c)
            m(row, c) = e.coeffs[c];
        ++row;
    }
    for (int c : idx)
        m(row++, c) = 1;
    return rref(m).rank == static_cast<int>(idx.size());
}

const std::array<Signature, 9> kCanonicalSignatures = {{{3, 0, 0},
                                                        {2, 1, 0},
                                                        {2, 0, 1},
                                                        {1, 1, 1},
                                                        {1, 0, 2},
                                                        {0, 3, 0},
                                                        {0, 2, 1},
                                                        {0, 1, 2},
                                                        {0, 0, 3}}};

}  // namespace

TEST_CASE("commutant bases") {
    CHECK(spans_basis_subset(commutant_basis(canonical(3, 0, 0).algebra), {0, 7}, 8));
    CHECK(spans_basis_subset(commutant_basis(canonical(0, 0, 3).algebra), {0}, 8));
    CHECK(spans_basis_subset(commutant_basis(canonical(2, 1, 0).algebra), {0}, 8));
}

TEST_CASE("nucleus bases") {
    CHECK(spans_basis_subset(nucleus_basis(canonical(3, 0, 0).algebra), {0, 4, 5, 6, 7}, 8));
    CHECK(spans_basis_subset(nucleus_basis(canonical(1, 1, 1).algebra), {0}, 8));
    CHECK(spans_basis_subset(nucleus_basis(canonical(2, 0, 1).algebra), {0, 4, 7}, 8));
    CHECK(spans_basis_subset(nucleus_basis(canonical(2, 1, 0).algebra), {0, 4, 7}, 8));
}

TEST_CASE("center bases") {
    CHECK(spans_basis_subset(center_basis(canonical(3, 0, 0).algebra), {0, 7}, 8));
    CHECK(spans_basis_subset(center_basis(canonical(2, 1, 0).algebra), {0}, 8));
    CHECK(spans_basis_subset(center_basis(canonical(0, 0, 3).algebra), {0}, 8));
}

TEST_CASE("center is the intersection of commutant and nucleus") {
    for (const Signature& s : kCanonicalSignatures) {
        KingdonAlgebra ka = canonical(s.b0, s.b1, s.bneg1);
        auto com = commutant_basis(ka.algebra);
        auto nuc = nucleus_basis(ka.algebra);
        auto cen = center_basis(ka.algebra);
        // every center element is in both spans
        for (const Element& z : cen) {
            Matrix mc(8, static_cast<int>(com.size()) + 1);
            for (int r = 0; r < 8; ++r) {
                for (size_t c = 0; c < com.size(); ++c)
                    mc(r, static_cast<int>(c)) = com[c].coeffs[r];
                mc(r, static_cast<int>(com.size())) = z.coeffs[r];
            }
            CHECK(rref(mc).rank == static_cast<int>(com.size()));
            Matrix mn(8, static_cast<int>(nuc.size()) + 1);
            for (int r = 0; r < 8; ++r) {
                for (size_t c = 0; c < nuc.size(); ++c)
                    mn(r, static_cast<int>(c)) = nuc[c].coeffs[r];
                mn(r, static_cast<int>(nuc.size())) = z.coeffs[r];
            }
            CHECK(rref(mn).rank == static_cast<int>(nuc.size()));
        }
    }
}

TEST_CASE("simplicity matches nondegeneracy") {
    for (const Signature& s : kCanonicalSignatures)
        CHECK(is_simple(canonical(s.b0, s.b1, s.bneg1)) == (s.b0 == 0));
    CHECK(is_simple(build_kingdon(
        FormedSpace::from_diagonal({Scalar(3), Scalar(-5, 2), Scalar(7)}))));
}

TEST_CASE("zero divisors") {
    // isotropic generator: i·i = 0
    KingdonAlgebra alt = canonical(3, 0, 0);
    auto w = find_zero_divisor(alt, 0);
    REQUIRE(w);
    CHECK(w->first == alt.algebra->basis_element(1));
    CHECK(w->second == alt.algebra->basis_element(1));
    CHECK(mul(w->first, w->second).is_zero());

    // split generator with Q = 1: (1 - e)(1 + e) = 0
    KingdonAlgebra split = canonical(0, 1, 2);
    auto ws = find_zero_divisor(split, 0);
    REQUIRE(ws);
    CHECK(!ws->first.is_zero());
    CHECK(!ws->second.is_zero());
    CHECK(mul(ws->first, ws->second).is_zero());

    // the octonions are a division algebra
    CHECK(!find_zero_divisor(canonical(0, 0, 3), 0));

    // every canonical signature except (0,0,3) has a witness
    for (const Signature& s : kCanonicalSignatures) {
        auto z = find_zero_divisor(canonical(s.b0, s.b1, s.bneg1), 0);
        if (s == Signature{0, 0, 3}) {
            CHECK(!z);
        } else {
            REQUIRE(z);
            CHECK(!z->first.is_zero());
            CHECK(!z->second.is_zero());
            CHECK(mul(z->first, z->second).is_zero());
        }
    }

    // norm-zero search on a non-canonical quantization: Q = (3/2, 5/2, -7/2)
    auto wq = find_zero_divisor(
        build_kingdon(FormedSpace::from_diagonal({Scalar(3), Scalar(5), Scalar(-7)})), 0);
    if (wq) {
        CHECK(!wq->first.is_zero());
        CHECK(mul(wq->first, wq->second).is_zero());
    }
}

TEST_CASE("classification") {
    auto cls = [](const Matrix& g) { return classify(FormedSpace::from_gram(g)); };

    Classification a = cls(Matrix::diagonal({Scalar(2), Scalar(2), Scalar(-2)}));
    CHECK(a.signature == Signature{0, 2, 1});
    CHECK(a.iso_class == "SPLIT_OCT");

    Classification b = cls(Matrix::diagonal({Scalar(0), Scalar(4), Scalar(-6)}));
    CHECK(b.signature == Signature{1, 1, 1});
    CHECK(b.iso_class == "K(1,1,1)~K(1,2,0)");

    Classification c = cls(Matrix(3, 3));
    CHECK(c.signature == Signature{3, 0, 0});
    CHECK(c.iso_class == "ALT_EXT");

    CHECK(cls(canonical_gram({1, 2, 0})).iso_class == "K(1,1,1)~K(1,2,0)");
    CHECK(cls(canonical_gram({0, 3, 0})).iso_class == "SPLIT_OCT");
    CHECK(cls(canonical_gram({0, 1, 2})).iso_class == "SPLIT_OCT");
    CHECK(cls(canonical_gram({0, 0, 3})).iso_class == "OCT");

    CHECK_THROWS_AS(classify(FormedSpace::from_diagonal({Scalar(1)})), DimensionTooLarge);
}

TEST_CASE("classification is a congruence invariant") {
    Rng rng(29);
    Matrix g = Matrix::diagonal({Scalar(0), Scalar(4), Scalar(-6)});
    for (int trial = 0; trial < 25; ++trial) {
        Matrix p(3, 3);
        do {
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    p(r, c) = rng.small_scalar();
        } while (determinant(p) == 0);
        Matrix g2 = p.transposed() * g * p;
        Classification c2 = classify(FormedSpace::from_gram(g2));
        CHECK(c2.signature == Signature{1, 1, 1});
        CHECK(c2.iso_class == "K(1,1,1)~K(1,2,0)");
    }
}

TEST_CASE("explicit isomorphism K(1,1,1) -> K(1,2,0)") {
    ExplicitIso iso = explicit_iso_111_120();  // throws on any of the 64 pairs
    // v2 v3 (the jk slot) lands on the third generator w3
    for (int r = 0; r < 8; ++r)
        CHECK(iso.map(r, 5) == (r == 3 ? 1 : 0));
    // the unit maps to the unit
    for (int r = 0; r < 8; ++r)
        CHECK(iso.map(r, 0) == (r == 0 ? 1 : 0));
    CHECK(determinant(iso.map) != 0);
}

TEST_CASE("split witnesses separate the non-isomorphic pairs") {
    KingdonAlgebra k210 = canonical(2, 1, 0);
    auto w210 = split_complex_witness(k210);
    REQUIRE(w210);
    CHECK(trace(*w210) == 0);
    CHECK(mul(*w210, *w210) == k210.algebra->one());
    CHECK(!split_complex_witness(canonical(2, 0, 1)));
    CHECK(split_complex_witness(canonical(0, 1, 2)));

    CHECK(!split_quaternion_witness(canonical(1, 0, 2)));
    CHECK(split_quaternion_witness(canonical(1, 2, 0)));

    KingdonAlgebra k111 = canonical(1, 1, 1);
    auto q = split_quaternion_witness(k111);
    REQUIRE(q);
    CHECK(mul(q->first, q->first) == k111.algebra->one());
    CHECK(mul(q->second, q->second) == -k111.algebra->one());
    CHECK((mul(q->first, q->second) + mul(q->second, q->first)).is_zero());
}

TEST_CASE("kingdon vs tower at sample quantizations") {
    CHECK(kingdon_vs_tower(canonical(0, 0, 3)).pass);
    CHECK(kingdon_vs_tower(canonical(3, 0, 0)).pass);
    CHECK(kingdon_vs_tower(build_kingdon(
                               FormedSpace::from_diagonal({Scalar(0), Scalar(2), Scalar(-2)})))
              .pass);
    CHECK(kingdon_vs_tower(build_kingdon(
                               FormedSpace::from_diagonal({Scalar(3), Scalar(-5), Scalar(1)})))
              .pass);
}

TEST_CASE("norm is multiplicative") {
    CHECK(check_norm_multiplicative(canonical(0, 0, 3), 120, 31).pass);
    CHECK(check_norm_multiplicative(canonical(1, 1, 1), 120, 31).pass);
}

TEST_CASE("structure report is coherent") {
    StructureReport rep = structure_report(FormedSpace::from_gram(canonical_gram({0, 0, 3})), 0);
    CHECK(rep.simple);
    CHECK(rep.division);
    CHECK(!rep.zero_divisor);
    CHECK(rep.center.size() == 1);
    CHECK(rep.nucleus.size() == 1);
    CHECK(rep.commutant.size() == 1);

    StructureReport alt = structure_report(FormedSpace::from_gram(canonical_gram({3, 0, 0})), 0);
    CHECK(!alt.simple);
    CHECK(!alt.division);
    REQUIRE(alt.zero_divisor);
    CHECK(mul(alt.zero_divisor->first, alt.zero_divisor->second).is_zero());
    CHECK(alt.nucleus.size() == 5);
}
