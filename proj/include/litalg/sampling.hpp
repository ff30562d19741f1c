#pragma once

// Standard small algebras and seeded random modules, sequences, contexts
// and triples for property tests.

#include <string>
#include <vector>

#include "litalg/tritriple.hpp"

namespace litalg {

AlgebraPtr truncated_polynomial(Field f, std::size_t n);  // k[x]/(x^n)
AlgebraPtr dual_numbers(Field f);
/// Equioriented path algebra k(1 -> 2 -> ... -> n).
AlgebraPtr path_algebra_An(Field f, std::size_t n);

/// Small test algebras: k, k[x]/x^2, k[x]/x^3, A_2, A_3, A_3 with a zero
/// relation, a two-cycle with radical square zero, the Kronecker algebra.
std::vector<AlgebraPtr> algebra_pool(Field f);

Module random_projective(const AlgebraPtr& a, std::size_t max_dim, Rng& rng);
/// Quotients and submodules of random projectives; nonzero, dim <= max_dim.
Module random_module(const AlgebraPtr& a, std::size_t max_dim, Rng& rng);

ShortExactSequence random_ses(const AlgebraPtr& a, std::size_t max_dim, Rng& rng);
/// A copy of s that is provably not exact (broken composition, lost rank, or
/// a zero surjection), chosen at random among the applicable kinds.
ShortExactSequence corrupt_ses(const ShortExactSequence& s, Rng& rng);

/// T, U from the pool; M a sum of U*e_j (x) e_i*T, dim M <= max_dim.
TriangularContext random_context(Field f, std::size_t max_dim, Rng& rng);
TripleModule random_triple(const TriangularContext& ctx, std::size_t max_dim, Rng& rng,
                           bool projective_b = false);

}  // namespace litalg
