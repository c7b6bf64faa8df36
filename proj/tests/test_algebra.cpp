#include "kingdon/algebra.hpp"
#include "kingdon/errors.hpp"
#include "kingdon/json_io.hpp"
#include "kingdon/kingdon.hpp"
#include "kingdon/random.hpp"

#include <doctest.h>

using namespace kingdon;

namespace {

KingdonAlgebra make(const std::vector<Scalar>& diag) {
    return build_kingdon(FormedSpace::from_diagonal(diag));
}

const std::vector<Scalar> kZero3 = {Scalar(0), Scalar(0), Scalar(0)};
const std::vector<Scalar> kOct = {Scalar(-2), Scalar(-2), Scalar(-2)};

enum Basis8 { kOne = 0, kI, kJ, kK, kIJ, kJK, kKI, kOmega };

}  // namespace

TEST_CASE("multiplication in the alternative exterior algebra") {
    KingdonAlgebra ka = make(kZero3);
    const AlgebraPtr& a = ka.algebra;
    CHECK(mul(a->basis_element(kI), a->basis_element(kJ)) == a->basis_element(kIJ));
    CHECK(mul(a->basis_element(kOmega), a->basis_element(kOmega)).is_zero());

    Rng rng(1);
    Element x = rng.element(a);
    CHECK(mul(a->one(), x) == x);
    CHECK(mul(x, a->one()) == x);
}

TEST_CASE("mul rejects elements of different algebras") {
    KingdonAlgebra a = make(kZero3), b = make(kOct);
    CHECK_THROWS_AS(mul(a.algebra->one(), b.algebra->one()), AlgebraMismatch);
}

TEST_CASE("associator values") {
    KingdonAlgebra ka = make(kZero3);
    const AlgebraPtr& a = ka.algebra;
    // (ij)k = ω and i(jk) = -ω, so the associator is 2ω
    CHECK(associator(a->basis_element(kI), a->basis_element(kJ), a->basis_element(kK)) ==
          Scalar(2) * a->basis_element(kOmega));

    Rng rng(2);
    for (const auto& diag : {kZero3, kOct}) {
        KingdonAlgebra k2 = make(diag);
        Element x = rng.element(k2.algebra), y = rng.element(k2.algebra);
        CHECK(associator(x, x, y).is_zero());
        CHECK(associator(k2.algebra->one(), x, y).is_zero());
    }
}

TEST_CASE("associator is trilinear") {
    KingdonAlgebra ka = make({Scalar(0), Scalar(2), Scalar(-2)});
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        Scalar s = rng.small_scalar(), u = rng.small_scalar();
        Element x = rng.element(ka.algebra), x2 = rng.element(ka.algebra);
        Element y = rng.element(ka.algebra), z = rng.element(ka.algebra);
        CHECK(associator(s * x + u * x2, y, z) ==
              s * associator(x, y, z) + u * associator(x2, y, z));
        CHECK(associator(y, s * x + u * x2, z) ==
              s * associator(y, x, z) + u * associator(y, x2, z));
        CHECK(associator(y, z, s * x + u * x2) ==
              s * associator(y, z, x) + u * associator(y, z, x2));
    }
}

TEST_CASE("commutator values") {
    KingdonAlgebra ka = make(kZero3);
    const AlgebraPtr& a = ka.algebra;
    CHECK(commutator(a->basis_element(kI), a->basis_element(kJ)) ==
          Scalar(2) * a->basis_element(kIJ));
    Rng rng(4);
    Element x = rng.element(a);
    CHECK(commutator(x, x).is_zero());
    CHECK(commutator(a->one(), x).is_zero());
}

TEST_CASE("mul is bilinear") {
    KingdonAlgebra ka = make(kOct);
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        Scalar s = rng.small_scalar(), u = rng.small_scalar();
        Element x = rng.element(ka.algebra), y = rng.element(ka.algebra),
                z = rng.element(ka.algebra);
        CHECK(mul(s * x + u * y, z) == s * mul(x, z) + u * mul(y, z));
        CHECK(mul(z, s * x + u * y) == s * mul(z, x) + u * mul(z, y));
    }
}

TEST_CASE("trace and norm") {
    KingdonAlgebra zero3 = make(kZero3), oct = make(kOct);
    CHECK(trace(zero3.algebra->one()) == 2);
    CHECK(norm(zero3.algebra->one()) == 1);
    CHECK(trace(zero3.algebra->basis_element(kI)) == 0);

    // T(3 + 5i) = 6 by linearity
    Element x = Scalar(3) * zero3.algebra->one() + Scalar(5) * zero3.algebra->basis_element(kI);
    CHECK(trace(x) == 6);

    CHECK(norm(zero3.algebra->basis_element(kI)) == 0);  // i(-i) = -i^2 = 0
    CHECK(norm(oct.algebra->basis_element(kI)) == 1);    // i^2 = -1

    // conjugation identities: x* = T(x) - x and (x*)* = x
    Rng rng(6);
    for (int t = 0; t < 25; ++t) {
        Element y = rng.element(oct.algebra);
        CHECK(conjugate(y) == trace(y) * oct.algebra->one() - y);
        CHECK(conjugate(conjugate(y)) == y);
    }
}

TEST_CASE("norm flags non-quadratic algebras") {
    // F[t]/(t^2 - t) with the identity conjugation: t t* = t is not scalar
    std::vector<std::vector<Scalar>> table(4, std::vector<Scalar>(2));
    table[0] = {Scalar(1), Scalar(0)};  // 1*1
    table[1] = {Scalar(0), Scalar(1)};  // 1*t
    table[2] = {Scalar(0), Scalar(1)};  // t*1
    table[3] = {Scalar(0), Scalar(1)};  // t*t = t
    AlgebraPtr a = Algebra::create("F[t]/(t^2-t)", {"1", "t"}, table, Matrix::identity(2));
    CHECK_THROWS_AS(norm(a->basis_element(1)), NotScalar);
    CHECK(check_involution(a->conjugation()).pass);  // conjugation itself is fine
}

TEST_CASE("trace requires a conjugation") {
    std::vector<std::vector<Scalar>> table(1, std::vector<Scalar>{Scalar(1)});
    AlgebraPtr bare = Algebra::create("bare", {"1"}, table);
    CHECK_THROWS_AS(trace(bare->one()), NoConjugation);
    CHECK_THROWS_AS(conjugate(bare->one()), NoConjugation);
}

TEST_CASE("check_involution verdicts") {
    KingdonAlgebra oct = make(kOct), zero3 = make(kZero3);
    CHECK(check_involution(oct.kappa).pass);
    CHECK(oct.kappa.kind == InvolutionKind::anti_automorphism);
    CHECK(check_involution(zero3.nu).pass);
    CHECK(zero3.nu.kind == InvolutionKind::automorphism);

    Involution ident{zero3.algebra, Matrix::identity(8), InvolutionKind::automorphism};
    CHECK(check_involution(ident).pass);

    // negating a single generator of the zero-form algebra breaks the law
    Matrix bad = Matrix::identity(8);
    bad(kI, kI) = -1;
    CheckResult r =
        check_involution(Involution{zero3.algebra, bad, InvolutionKind::automorphism});
    CHECK(!r.pass);
    CHECK(!r.detail.empty());
}

TEST_CASE("quadratic relation on basis and random elements") {
    Rng rng(7);
    for (const auto& diag :
         {kZero3, kOct, std::vector<Scalar>{Scalar(0), Scalar(2), Scalar(-2)}}) {
        KingdonAlgebra ka = make(diag);
        for (int m = 0; m < 8; ++m) {
            Element b = ka.algebra->basis_element(m);
            CHECK((mul(b, b) - trace(b) * b + ka.algebra->scalar_element(norm(b))).is_zero());
        }
        for (int t = 0; t < 100; ++t) {
            Element x = rng.element(ka.algebra);
            CHECK((mul(x, x) - trace(x) * x + ka.algebra->scalar_element(norm(x))).is_zero());
        }
    }
}

TEST_CASE("algebra json round-trips") {
    KingdonAlgebra ka = make({Scalar(0), Scalar(3), Scalar(-5)});
    nlohmann::json doc = algebra_to_json(*ka.algebra);
    AlgebraPtr back = algebra_from_json(doc);
    CHECK(back->dim() == 8);
    CHECK(back->basis_names() == ka.algebra->basis_names());
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            CHECK(back->table(i, j) == ka.algebra->table(i, j));
    // canonical serialization: document -> algebra -> document is bit-exact
    CHECK(algebra_to_json(*back).dump() == doc.dump());
}

TEST_CASE("algebra json rejects malformed documents") {
    CHECK_THROWS_AS(algebra_from_json(nlohmann::json::parse("{\"name\":\"x\"}")), ParseError);
    nlohmann::json bad = algebra_to_json(*make(kZero3).algebra);
    bad["table"][0][0][0] = "1/0";
    CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
}

TEST_CASE("structure table must be unital") {
    std::vector<std::vector<Scalar>> table(4, std::vector<Scalar>(2));
    table[0] = {Scalar(1), Scalar(0)};
    table[1] = {Scalar(0), Scalar(0)};  // 1*t = 0 breaks unitality
    table[2] = {Scalar(0), Scalar(1)};
    table[3] = {Scalar(0), Scalar(0)};
    CHECK_THROWS_AS(Algebra::create("broken", {"1", "t"}, table), Error);
}
