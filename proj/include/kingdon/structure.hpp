#pragma once

#include "kingdon/kingdon.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace kingdon {

// Exact kernel of the stacked maps x -> x b_i - b_i x over all basis
// elements; every commutation condition is linear in x.
std::vector<Element> commutant_basis(const AlgebraPtr& a);

// Exact kernel of the stacked associator maps n -> (n,b_i,b_j), (b_i,n,b_j),
// (b_i,b_j,n) over all basis pairs (trilinearity makes the basis sufficient).
std::vector<Element> nucleus_basis(const AlgebraPtr& a);

// Intersection of commutant and nucleus.
std::vector<Element> center_basis(const AlgebraPtr& a);

// det(gram) != 0; cross-checked against nondegeneracy of the diagonal norm
// form (all eight coefficients nonzero).
bool is_simple(const KingdonAlgebra& ka);

// Tiered deterministic search: (1) an isotropic basis vector e gives (e,e);
// (2) a basis vector with Q(e) = s^2 > 0, s rational, gives
// (1 - e/s, 1 + e/s); (3) seeded search over norm-zero elements, pairing x
// with its conjugate. Nullopt when nothing is found (the division algebras).
std::optional<std::pair<Element, Element>> find_zero_divisor(const KingdonAlgebra& ka,
                                                             uint64_t seed);

struct Signature {
    int b0 = 0, b1 = 0, bneg1 = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

// Canonical diagonal gram diag(0,...,2,...,-2,...) for a signature.
Matrix canonical_gram(const Signature& s);

Signature signature_of(const FormedSpace& fs);

// One of the seven real isomorphism classes of dimension-8 Kingdon algebras.
std::string iso_class_label(const Signature& s);

struct Classification {
    Signature signature;
    std::string iso_class;
};

Classification classify(const FormedSpace& fs);  // requires dim(V) = 3

struct ExplicitIso {
    KingdonAlgebra source;  // K(1,1,1)
    KingdonAlgebra target;  // K(1,2,0)
    Matrix map;             // coefficient map, verified on all 64 basis pairs
};

// The displayed basis isomorphism K(1,1,1) -> K(1,2,0); throws
// VerificationFailed with a counterexample pair if the homomorphism law
// breaks anywhere.
ExplicitIso explicit_iso_111_120();

// Traceless x with x^2 = 1, searched over scaled basis elements through the
// diagonal norm form; distinguishes e.g. K(2,1,0) from K(2,0,1).
std::optional<Element> split_complex_witness(const KingdonAlgebra& ka);

// Anticommuting traceless pair with x^2 = 1 and y^2 = -1 (a split quaternion
// plane); distinguishes K(1,1,1) from K(1,0,2).
std::optional<std::pair<Element, Element>> split_quaternion_witness(const KingdonAlgebra& ka);

// Builds the length-3 tower over the same Q values, relabels it onto
// {1,i,j,k,ij,jk,ki,ω}, and compares the two structure tables entrywise; the
// first differing entry is reported.
CheckResult kingdon_vs_tower(const KingdonAlgebra& ka);

struct StructureReport {
    Classification cls;
    bool simple = false;
    bool division = false;
    std::vector<Element> commutant, nucleus, center;
    std::optional<std::pair<Element, Element>> zero_divisor;
};

StructureReport structure_report(const FormedSpace& fs, uint64_t seed);

}  // namespace kingdon
