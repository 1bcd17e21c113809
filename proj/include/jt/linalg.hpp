#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jt/matrix.hpp"

namespace jt {

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Columns form a basis of ker m, one per free column of rref(m), in order.
Matrix kernel_basis(const Matrix& m);
// The columns of m at the pivot positions of rref(m).
Matrix image_basis(const Matrix& m);

// Fraction-free (Bareiss) over Q. The 0x0 determinant is 1.
Scalar determinant(const Matrix& m);
Matrix inverse(const Matrix& m);

// Reflexive generalized inverse: G[P,S] = m[S,P]^{-1} and zero elsewhere, P the
// pivot columns and S the first independent rows.
Matrix generalized_inverse(const Matrix& m);
// Same construction with P and S picked greedily along the given orders.
Matrix generalized_inverse(const Matrix& m, std::span<const std::size_t> row_order,
                           std::span<const std::size_t> col_order);

// Indices of a maximal independent set of columns, chosen greedily along order.
std::vector<std::size_t> greedy_independent_columns(const Matrix& m,
                                                    std::span<const std::size_t> order);

// Columns of k that extend the independent columns of b to a basis of span(k),
// chosen greedily from the left. Throws PreconditionError if b is not inside span(k).
Matrix extend_to_complement(const Matrix& b, const Matrix& k);

// Some x with a*x = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// l*w = identity for w of full column rank.
Matrix left_inverse(const Matrix& w);

Matrix span_intersection(const Matrix& a, const Matrix& b);
Matrix span_sum(const Matrix& a, const Matrix& b);

// span(super) / span(sub) with the standard representatives: the greedy
// completion of sub inside super.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(const Matrix& sub, const Matrix& super);

  std::size_t dim() const { return reps_.cols(); }
  std::size_t ambient_dim() const { return reps_.rows(); }
  const Matrix& sub_basis() const { return sub_; }
  const Matrix& representatives() const { return reps_; }

  bool contains(const Matrix& vectors) const;
  // Coordinates of each column modulo sub; throws if a column leaves span(super).
  Matrix coordinates(const Matrix& vectors) const;

 private:
  Matrix sub_, reps_, basis_, left_inv_;
};

}  // namespace jt
