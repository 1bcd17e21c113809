#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jt/errors.hpp"
#include "jt/graded.hpp"
#include "jt/pid.hpp"
#include "jt/torsion.hpp"

namespace jt {

// Subsets of {1..n} ordered by size, then lexicographically. Bit k-1 of a
// mask stands for e_k.
class ExteriorBasis {
 public:
  explicit ExteriorBasis(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t size() const { return subsets_.size(); }
  std::uint32_t subset(std::size_t pos) const { return subsets_[pos]; }
  std::size_t position(std::uint32_t mask) const { return pos_[mask]; }
  static Part parity(std::uint32_t mask);
  std::string label(std::size_t pos) const;  // "{}", "{1,3}", ...

 private:
  std::size_t n_;
  std::vector<std::uint32_t> subsets_;
  std::vector<std::size_t> pos_;
};

enum class ExteriorOp { eps, eps_star, iota, iota_star };

// Matrix in the subset bases, entries 0 and +-1. eps and eps_star act on
// Lambda(F^n); iota maps Lambda(F^{n-1}) -> Lambda(F^n) and iota_star goes back.
// j is 1-based.
Matrix exterior_operator(ExteriorOp kind, std::size_t j, std::size_t n, FieldSpec f);

// The even algebra automorphism e_k -> e_{sigma^{-1}(k)} of Lambda(F^n);
// sigma is a 1-based permutation.
Matrix exterior_permutation(const std::vector<std::size_t>& sigma, FieldSpec f);

// s (x) a with the subset index outermost: block (S', S) is s(S', S) * a.
template <class M>
M kron(const Matrix& s, const M& a) {
  M out(s.rows() * a.rows(), s.cols() * a.cols(), a.field());
  M neg = -a;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (s.entry_is_zero(i, j)) continue;
      Scalar x = s.at(i, j);
      if (x.is_one())
        out.set_block(i * a.rows(), j * a.cols(), a);
      else if ((-x).is_one())
        out.set_block(i * a.rows(), j * a.cols(), neg);
      else
        throw std::invalid_argument("kron expects a sign matrix");
    }
  return out;
}

// Natural indices of E (x) Lambda(F^n) split by parity of |S| (swapped when shifted).
struct KoszulLayout {
  std::size_t n = 0, dim = 0;
  bool shifted = false;
  std::array<std::vector<std::size_t>, 2> idx;

  KoszulLayout(std::size_t n, std::size_t dim, bool shifted);
  GradedSpace space() const { return {idx[0].size(), idx[1].size()}; }
};

// Cuts a map between natural coordinates into a homogeneous graded map;
// throws std::logic_error if the remaining blocks are not zero.
template <class M>
GradedMapT<M> graded_from_natural(const M& natural, const KoszulLayout& src, const KoszulLayout& tgt, bool odd) {
  GradedMapT<M> out{src.space(), tgt.space(), odd, {}};
  for (Part s : kParts) {
    Part ts = out.target_part(s);
    M cols = natural.select_cols(src.idx[index(s)]);
    out.part[index(s)] = cols.select_rows(tgt.idx[index(ts)]);
    if (!cols.select_rows(tgt.idx[index(flip(ts))]).is_zero())
      throw std::logic_error("operator is not homogeneous of the expected parity");
  }
  return out;
}

// Commuting tuple of square operators on E. M = Matrix for finite tuples and
// PolyMatrix (1x1 multiplication operators) for the F[z] model.
template <class M>
struct OperatorTupleT {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<M> ops;

  std::size_t size() const { return ops.size(); }
  const M& operator[](std::size_t j) const { return ops.at(j - 1); }  // 1-based
};

// Validates shapes and pairwise commutation (NonCommutingError, 1-based pair).
template <class M>
OperatorTupleT<M> make_operator_tuple(FieldSpec f, std::size_t dim, std::vector<M> ops) {
  if (ops.size() > 20) throw std::invalid_argument("tuple too long");
  for (const auto& a : ops)
    if (a.rows() != dim || a.cols() != dim || !(a.field() == f))
      throw std::invalid_argument("tuple entry has the wrong shape or field");
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (!(ops[i] * ops[j] == ops[j] * ops[i])) throw NonCommutingError(i + 1, j + 1);
  return {f, dim, std::move(ops)};
}

using MatrixTuple = OperatorTupleT<Matrix>;
using PolyTuple = OperatorTupleT<PolyMatrix>;

// Multiplication operators on E = F[z].
PolyTuple poly_tuple(const std::vector<Poly>& polys);

// d^A = sum_j A_j (x) eps_j^*.
template <class M>
ComplexT<M> koszul_complex(const OperatorTupleT<M>& a) {
  std::size_t n = a.size();
  ExteriorBasis b(n);
  M natural(b.size() * a.dim, b.size() * a.dim, a.field);
  for (std::size_t j = 1; j <= n; ++j)
    natural += kron(exterior_operator(ExteriorOp::eps_star, j, n, a.field), a[j]);
  KoszulLayout l(n, a.dim, false);
  return make_complex(l.space(), graded_from_natural(natural, l, l, true));
}

template <class M>
OperatorTupleT<M> remove_entry(const OperatorTupleT<M>& a, std::size_t j) {
  if (j < 1 || j > a.size()) throw std::out_of_range("remove_entry: index out of range");
  OperatorTupleT<M> out{a.field, a.dim, a.ops};
  out.ops.erase(out.ops.begin() + static_cast<std::ptrdiff_t>(j - 1));
  return out;
}

// K(jA) -A_j-> K(jA)[1] -iota_j-> K(A) -iota_j^* eps_j^*-> K(jA) with homotopy
// (0, iota_j^*, eps_j iota_j).
template <class M>
TriangleT<M> triangle_X(const OperatorTupleT<M>& a, std::size_t j) {
  std::size_t n = a.size();
  if (j < 1 || j > n) throw std::out_of_range("triangle_X: index out of range");
  FieldSpec f = a.field;
  auto ja = remove_entry(a, j);
  KoszulLayout small(n - 1, a.dim, false), small_sh(n - 1, a.dim, true), big(n, a.dim, false);
  M id_e = M::identity(a.dim, f);
  std::size_t small_size = ExteriorBasis(n - 1).size();
  Matrix one = Matrix::identity(small_size, f);
  Matrix iota = exterior_operator(ExteriorOp::iota, j, n, f);
  Matrix iota_star = exterior_operator(ExteriorOp::iota_star, j, n, f);
  Matrix eps = exterior_operator(ExteriorOp::eps, j, n, f);
  Matrix eps_star = exterior_operator(ExteriorOp::eps_star, j, n, f);

  TriangleT<M> x;
  ComplexT<M> kj = koszul_complex(ja);
  x.X = {kj, shift(kj), koszul_complex(a)};
  x.v = {graded_from_natural(kron(one, a[j]), small, small_sh, true),
         graded_from_natural(kron(iota, id_e), small_sh, big, true),
         graded_from_natural(kron(iota_star * eps_star, id_e), big, small, true)};
  x.t = std::array<GradedMapT<M>, 3>{GradedMapT<M>::zero(small_sh.space(), small.space(), true, f),
                                     graded_from_natural(kron(iota_star, id_e), big, small_sh, true),
                                     graded_from_natural(kron(eps * iota, id_e), small, big, true)};
  return x;
}

// sigma(A) = (A_sigma(1), ..., A_sigma(n)) and the even chain isomorphism
// 1 (x) sigma^{-1} : K(A) -> K(sigma(A)).
template <class M>
struct PermutedTuple {
  OperatorTupleT<M> tuple;
  GradedMapT<M> iso;
};

void check_permutation(const std::vector<std::size_t>& sigma, std::size_t n);

template <class M>
PermutedTuple<M> permute_tuple(const OperatorTupleT<M>& a, const std::vector<std::size_t>& sigma) {
  check_permutation(sigma, a.size());
  OperatorTupleT<M> out{a.field, a.dim, {}};
  for (std::size_t k : sigma) out.ops.push_back(a[k]);
  KoszulLayout l(a.size(), a.dim, false);
  M natural = kron(exterior_permutation(sigma, a.field), M::identity(a.dim, a.field));
  return {std::move(out), graded_from_natural(natural, l, l, false)};
}

}  // namespace jt
