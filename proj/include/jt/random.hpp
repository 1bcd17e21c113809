#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jt/graded.hpp"

namespace jt {

using Rng = std::mt19937_64;

// Seed of trial k derived from a base seed (splitmix64 finaliser).
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial);

// Small integers, reduced into the field.
Scalar random_scalar(Rng& rng, FieldSpec f, int lo = -3, int hi = 3);
Scalar random_nonzero_scalar(Rng& rng, FieldSpec f, int bound = 3);
Matrix random_matrix(Rng& rng, FieldSpec f, std::size_t rows, std::size_t cols, double zero_prob = 0.3);
// Unit lower times unit upper triangular with small entries, times a random
// nonzero diagonal.
Matrix random_invertible(Rng& rng, FieldSpec f, std::size_t n);

struct ExactEndo {
  GradedMap alpha;
  Scalar expected_torsion;  // det(S_-)/det(S_+) for the conjugating isomorphisms
};

// alpha = S o (canonical exact endomorphism) o S^{-1}; the canonical one has
// torsion 1 in its own basis, so naturality predicts the stored value.
ExactEndo random_exact_endo(Rng& rng, FieldSpec f, std::size_t n);

// A complex with homology dims (h_plus, h_minus) and rank d_+ = r_plus,
// rank d_- = r_minus, in randomly conjugated coordinates.
Complex2 random_complex(Rng& rng, FieldSpec f, std::size_t h_plus, std::size_t h_minus, std::size_t r_plus,
                        std::size_t r_minus);

}  // namespace jt
