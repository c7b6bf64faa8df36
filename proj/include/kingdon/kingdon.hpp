#pragma once

#include "kingdon/algebra.hpp"

#include <array>
#include <memory>

namespace kingdon {

// Rational vector space of dimension <= 3 with a symmetric bilinear form,
// held together with a congruence diagonalization p^T gram p = diag(diag).
// Columns of p are the orthogonal basis in input coordinates.
struct FormedSpace {
    int dim = 0;
    Matrix gram;
    Matrix p;
    Matrix p_inv;
    std::vector<Scalar> diag;

    static FormedSpace from_gram(const Matrix& gram);  // throws NonSymmetric
    static FormedSpace from_diagonal(const std::vector<Scalar>& d);

    // B(u,v) for input-basis coordinate vectors.
    Scalar form(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;
};

// K(V,B) on the diagonalized basis. For dim 3 the basis is
// {1,i,j,k,ij,jk,ki,ω} with the quantized product table in the values
// Q(e_h) = diag[h]/2; for dim < 3 it is the associative Clifford algebra.
struct KingdonAlgebra {
    AlgebraPtr algebra;
    FormedSpace space;
    std::vector<Scalar> q;  // Q(e_h)
    Involution nu;          // main automorphism: fixes even grades, negates odd
    Involution kappa;       // Clifford conjugation; also attached to the algebra
    int omega_index = -1;   // 7 when dim == 3

    int dim_v() const { return space.dim; }
    // Image of an input-coordinate vector of V inside the algebra.
    Element vector_element(const std::vector<Scalar>& input_coords) const;
};

KingdonAlgebra build_kingdon(const FormedSpace& fs);  // throws DimensionTooLarge

// Binary product tree whose leaves are vectors of V in input coordinates.
class Word {
public:
    static Word vec(std::vector<Scalar> input_coords);
    static Word prod(const Word& l, const Word& r);

    bool is_leaf() const;
    int leaf_count() const;
    const std::vector<Scalar>& coords() const;  // leaves only
    Word left() const;
    Word right() const;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

// Value of the word in K(V,B), computed without the structure table for
// words of up to three vectors: multilinear expansion, then the Clifford
// relation uv + vu = B(u,v), the rebracketing identity
//   (ab)c + a(bc) = a B(b,c) - b B(c,a) + c B(a,b),
// and the alternative laws. Longer words collapse their subtrees first and
// finish through the table.
Element reduce_word(const Word& w, const KingdonAlgebra& ka);

// All twelve bracketed/permuted/signed expressions of the volume element
// evaluate, via reduce_word, to one and the same element.
CheckResult forms_of_omega_check(const KingdonAlgebra& ka);

struct AdmissibleTriples {
    std::vector<std::array<int, 3>> triples;  // basis indices; 7 lines x 3 cyclic shifts
    CheckResult verdict;                      // xy = z and yx = -z for each
};

// The seven oriented Fano lines of the octonion basis, with their cyclic
// permutations. Throws NotOctonions unless every Q(e_h) = -1.
AdmissibleTriples admissible_triples(const KingdonAlgebra& ka);

// Even span {1,ij,jk,ki}, odd span {i,j,k,ω}: checks the Z/2 product grading
// and that nu is +1 on even, -1 on odd.
CheckResult grading_check(const KingdonAlgebra& ka);

// Diagonal coefficients (over a_0^2 .. a_7^2) of the norm form in the
// Q-values; index 0 is the unit coefficient 1.
std::vector<Scalar> norm_form_coefficients(const std::vector<Scalar>& q);

// The diagonal norm expansion evaluated at x; agrees with norm(x).
Scalar kingdon_norm(const KingdonAlgebra& ka, const Element& x);

}  // namespace kingdon
