#pragma once

// Field-specialised row operations shared by the elimination routines.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "jt/kernels.hpp"
#include "jt/matrix.hpp"

namespace jt::detail {

struct RationalOps {
  using T = mpq_class;
  static bool zero(const T& x) { return sgn(x) == 0; }
  static T inv(const T& x) { return T(1) / x; }
  static T one() { return T(1); }
  static void scale(std::span<T> row, const T& f) {
    for (auto& x : row)
      if (sgn(x) != 0) x *= f;
  }
  // dst -= f * src
  static void sub_mul(std::span<T> dst, std::span<const T> src, const T& f) {
    mpq_class t;
    for (std::size_t k = 0; k < dst.size(); ++k) {
      if (sgn(src[k]) == 0) continue;
      mpq_mul(t.get_mpq_t(), f.get_mpq_t(), src[k].get_mpq_t());
      dst[k] -= t;
    }
  }
};

struct ResidueOps {
  using T = std::uint32_t;
  std::uint32_t p;
  static bool zero(T x) { return x == 0; }
  T inv(T x) const { return mod_inverse(x, p); }
  static T one() { return 1; }
  void scale(std::span<T> row, T f) const { kernels::scale_mod(row, f, p); }
  void sub_mul(std::span<T> dst, std::span<const T> src, T f) const {
    if (f != 0) kernels::axpy_mod(dst, src, p - f, p);
  }
};

template <class F>
decltype(auto) with_ops(Matrix& m, F&& f) {
  if (m.field().is_rational()) return f(RationalOps{}, m.rational_data());
  return f(ResidueOps{m.field().p}, m.residue_data());
}

template <class F>
decltype(auto) with_ops(const Matrix& m, F&& f) {
  if (m.field().is_rational()) return f(RationalOps{}, m.rational_data());
  return f(ResidueOps{m.field().p}, m.residue_data());
}

// In-place reduced row echelon form of a rows x cols row-major block. Only the
// first `limit` columns are searched for pivots.
template <class Ops>
std::vector<std::size_t> rref_in_place(const Ops& ops, std::vector<typename Ops::T>& a, std::size_t rows,
                                       std::size_t cols, std::size_t limit) {
  using T = typename Ops::T;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  auto row = [&](std::size_t i) { return std::span<T>(a.data() + i * cols, cols); };
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!Ops::zero(a[i * cols + c])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[r * cols + k]);
    T f = ops.inv(a[r * cols + c]);
    ops.scale(row(r), f);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || Ops::zero(a[i * cols + c])) continue;
      T g = a[i * cols + c];
      ops.sub_mul(row(i), std::span<const T>(a.data() + r * cols, cols), g);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Echelon basis grown one vector at a time; answers "is v independent of what
// has been added so far".
template <class Ops>
class IncrementalSpan {
 public:
  using T = typename Ops::T;
  IncrementalSpan(Ops ops, std::size_t n) : ops_(ops), n_(n) {}

  bool add(std::vector<T> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const T& c = v[pivots_[k]];
      if (Ops::zero(c)) continue;
      T f = c;
      ops_.sub_mul(std::span<T>(v), std::span<const T>(rows_[k]), f);
    }
    std::size_t pc = 0;
    while (pc < n_ && Ops::zero(v[pc])) ++pc;
    if (pc == n_) return false;
    ops_.scale(std::span<T>(v), ops_.inv(v[pc]));
    rows_.push_back(std::move(v));
    pivots_.push_back(pc);
    return true;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  Ops ops_;
  std::size_t n_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace jt::detail
