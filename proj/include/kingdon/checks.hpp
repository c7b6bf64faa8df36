#pragma once

#include "kingdon/kingdon.hpp"
#include "kingdon/random.hpp"

namespace kingdon {

// Exhaustive: the associator changes sign under the transpositions (1 2) and
// (2 3) on every basis triple, which is the full alternating law by
// trilinearity.
CheckResult check_alternativity(const AlgebraPtr& a);

// (x(yz))x = x((yz)x) = (xy)(zx) on seeded random triples.
CheckResult check_moufang(const AlgebraPtr& a, int samples, uint64_t seed);

// All bracketings of every word of length <= 4 in two random elements agree.
CheckResult check_diassociativity(const AlgebraPtr& a, int samples, uint64_t seed);

// (uv)w = w(vu) for all triples of orthogonal basis vectors of V.
CheckResult check_palindromic(const KingdonAlgebra& ka);

// uv + vu = B(u,v)·1 for all input-basis vector pairs (mapped through the
// change of basis) and for all diagonal-basis pairs.
CheckResult check_clifford_relation(const KingdonAlgebra& ka);

// x^2 - T(x)x + N(x)·1 = 0 on all basis elements and seeded random elements.
CheckResult check_quadratic(const AlgebraPtr& a, int samples, uint64_t seed);

// The diagonal norm expansion agrees with x x* everywhere.
CheckResult check_kingdon_norm_agreement(const KingdonAlgebra& ka, int samples, uint64_t seed);

// N(xy) = N(x) N(y) on seeded random pairs.
CheckResult check_norm_multiplicative(const KingdonAlgebra& ka, int pairs, uint64_t seed);

// reduce_word equals table multiplication on every vector word of length
// <= 3 (both bracketings at length 3).
CheckResult check_reduce_word_agreement(const KingdonAlgebra& ka);

}  // namespace kingdon
