#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "jt/koszul.hpp"
#include "jt/poly.hpp"
#include "jt/random.hpp"

namespace jt {

// n commuting operators on F^dim: a random conjugate of a block-diagonal
// tuple whose blocks are polynomials in one base matrix per block. Blocks
// with nilpotent base and vanishing constant terms give nonzero homology.
MatrixTuple random_commuting_tuple(Rng& rng, FieldSpec f, std::size_t n, std::size_t dim);

// (A_1, ..., A_n) and (B_1, A_2, ..., A_n) taken from one commuting family.
std::pair<MatrixTuple, MatrixTuple> random_tuple_pair(Rng& rng, FieldSpec f, std::size_t n, std::size_t dim);

// lead * prod (z - r)^k with roots drawn from [-root_bound, root_bound] minus
// the excluded ones, total degree in [min_degree, max_degree].
FactoredPoly random_factored(Rng& rng, FieldSpec f, std::size_t min_degree, std::size_t max_degree,
                             const std::vector<Scalar>& excluded = {}, int root_bound = 4);

// count pairwise coprime factored polynomials (disjoint root sets).
std::vector<FactoredPoly> random_coprime_family(Rng& rng, FieldSpec f, std::size_t count, std::size_t min_degree,
                                                std::size_t max_degree);

// Uniform permutation of 1..n.
std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n);

}  // namespace jt
