#pragma once

#include "kingdon/matrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kingdon {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Element of a structure-constant algebra: a coefficient vector over the
// algebra's named basis.
struct Element {
    AlgebraPtr algebra;
    std::vector<Scalar> coeffs;

    bool is_zero() const;
};

enum class InvolutionKind { automorphism, anti_automorphism };

// Linear involution given by its matrix on the basis (matrix^2 = identity).
struct Involution {
    AlgebraPtr algebra;
    Matrix matrix;
    InvolutionKind kind = InvolutionKind::automorphism;
};

struct CheckResult {
    bool pass = true;
    long checks = 0;
    std::string detail;  // counterexample description when !pass
};

// Finite-dimensional unital algebra over Q with a dense structure-constant
// table: table(i,j) is the coefficient vector of (basis i)(basis j). Index 0
// is the unit "1". Immutable after construction; safe to share across
// threads.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    // table is dim*dim coefficient vectors, row-major (i*dim + j). Unitality
    // of row/column 0 is enforced. An attached conjugation is stored as an
    // anti-automorphism matrix; trace and norm are derived from it.
    static AlgebraPtr create(std::string name, std::vector<std::string> basis_names,
                             std::vector<std::vector<Scalar>> table,
                             std::optional<Matrix> conjugation_matrix = std::nullopt);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const std::vector<Scalar>& table(int i, int j) const {
        return table_[static_cast<size_t>(i) * dim_ + j];
    }

    bool has_conjugation() const { return conj_.has_value(); }
    const Involution& conjugation() const;  // throws NoConjugation

    Element element(std::vector<Scalar> coeffs) const;
    Element basis_element(int m) const;
    Element scalar_element(const Scalar& s) const;
    Element zero() const { return scalar_element(Scalar(0)); }
    Element one() const { return scalar_element(Scalar(1)); }

    // Set when every basis product is a scalar multiple of one basis element
    // (true for all Clifford-like and Cayley-Dickson tables here); mul takes
    // a sparse path in that case.
    struct Mono {
        int idx = -1;  // -1 encodes the zero product
        Scalar coeff;
        Int scaled;  // coeff * mono_denominator(), an exact integer
    };
    const Mono* mono_table() const { return mono_.empty() ? nullptr : mono_.data(); }
    const Int& mono_denominator() const { return mono_den_; }

private:
    Algebra() = default;

    std::string name_;
    std::vector<std::string> basis_names_;
    int dim_ = 0;
    std::vector<std::vector<Scalar>> table_;
    std::optional<Involution> conj_;
    std::vector<Mono> mono_;
    Int mono_den_ = 1;  // common denominator of all mono coefficients
};

Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator-(const Element& x);
Element operator*(const Scalar& s, const Element& x);
Element operator*(const Element& x, const Element& y);  // = mul
bool operator==(const Element& x, const Element& y);

// Bilinear extension of the structure table. Throws AlgebraMismatch when the
// operands live in different algebras.
Element mul(const Element& x, const Element& y);

// (x,y,z) = (xy)z - x(yz)
Element associator(const Element& x, const Element& y, const Element& z);

// [x,y] = xy - yx
Element commutator(const Element& x, const Element& y);

Element apply(const Involution& inv, const Element& x);

Element conjugate(const Element& x);  // throws NoConjugation

// T(x) = x + x*, which must be a scalar multiple of 1.
Scalar trace(const Element& x);  // throws NoConjugation, NotScalar

// N(x) = x x*, which must be a scalar multiple of 1; a nonscalar product
// means the algebra is not symmetric quadratic.
Scalar norm(const Element& x);  // throws NoConjugation, NotScalar

// Verifies matrix^2 = identity and the (anti-)homomorphism law on all basis
// pairs; the counterexample pair is reported on failure.
CheckResult check_involution(const Involution& inv);

std::string to_string(const Element& x);

}  // namespace kingdon
