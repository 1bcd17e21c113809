#pragma once

#include <random>
#include <vector>

#include "jt/matrix.hpp"

namespace jt::test {

inline const FieldSpec Q = FieldSpec::rationals();
inline const FieldSpec GF = FieldSpec::prime_field(10007);

inline Matrix int_matrix(std::mt19937_64& rng, FieldSpec f, std::size_t r, std::size_t c, int lo = -3,
                            int hi = 3, double zero_bias = 0.3) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::bernoulli_distribution zero(zero_bias);
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!zero(rng)) m.set(i, j, static_cast<long>(val(rng)));
  return m;
}

// Random matrix of prescribed rank as a product of random factors.
inline Matrix int_rank_matrix(std::mt19937_64& rng, FieldSpec f, std::size_t r, std::size_t c,
                                 std::size_t k) {
  return int_matrix(rng, f, r, k, -3, 3, 0.0) * int_matrix(rng, f, k, c, -3, 3, 0.0);
}

// Laplace expansion along the first row.
inline Scalar cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(m.field());
  Scalar acc = Scalar::zero(m.field());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    Scalar term = m.at(0, j) * cofactor_det(m.select_rows(rows).select_cols(cols));
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline Matrix mat(FieldSpec f, const std::vector<std::vector<long>>& rows) { return Matrix::from_rows(f, rows); }

}  // namespace jt::test
