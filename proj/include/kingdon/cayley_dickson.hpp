#pragma once

#include "kingdon/algebra.hpp"

#include <cstdint>

namespace kingdon {

// The base field as a one-dimensional algebra with identity conjugation.
AlgebraPtr base_field();

// Cayley-Dickson double A^gamma on pairs (a,b):
//   (a,b)(c,d) = (ac + gamma d*b, da + bc*),   (a,b)* = (a*, -b).
// The first copy of the basis keeps its names; the second copy is suffixed
// with gen_name. Throws InvalidConjugation unless the conjugation of a
// passes check_involution.
AlgebraPtr cd_double(const AlgebraPtr& a, const Scalar& gamma, const std::string& gen_name);

// Iterated doubles from the base field, generators named i, j, k, l.
// Throws TowerTooTall beyond four steps (dim 16).
AlgebraPtr cd_tower(const std::vector<Scalar>& gammas);

// Basis change: new basis m = signs[m] * (old basis perm[m]), renamed.
AlgebraPtr relabel(const AlgebraPtr& a, const std::vector<int>& perm,
                   const std::vector<int>& signs, std::vector<std::string> names,
                   std::string name);

// Reorders a length-3 tower {1,i,j,ij,k,ik,jk,ijk} onto the Kingdon basis
// order {1,i,j,k,ij,jk,ki,ω}, with ki = -ik.
AlgebraPtr cd_relabel_to_kingdon_basis(const AlgebraPtr& tower8);

struct PropertyTriple {
    bool commutative = false;
    bool associative = false;
    bool alternative = false;
    friend bool operator==(const PropertyTriple&, const PropertyTriple&) = default;
};

// Exhaustive basis decisions: commutativity on pairs, associativity on
// triples, alternativity through the alternating-associator law on triples
// (each is multilinear, so bases suffice).
PropertyTriple algebra_properties(const AlgebraPtr& a);

bool conjugation_is_trivial(const AlgebraPtr& a);

struct LadderReport {
    PropertyTriple base;
    PropertyTriple doubled;
    bool base_conjugation_trivial = false;
};

// Property report for a and for double(a, gamma), for cross-checking the
// doubling biconditionals at desk scale.
LadderReport property_ladder(const AlgebraPtr& a, const Scalar& gamma);

// Verifies T((a,b)) = T(a) and N((a,b)) = N(a) - gamma N(b) on all basis
// pairs and on seeded random pairs.
CheckResult cd_trace_norm_check(const AlgebraPtr& doubled, const AlgebraPtr& base,
                                const Scalar& gamma, int random_pairs, uint64_t seed);

}  // namespace kingdon
