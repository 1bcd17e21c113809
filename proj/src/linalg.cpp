#include "jt/linalg.hpp"

#include <numeric>
#include <stdexcept>

#include "elim.hpp"
#include "jt/errors.hpp"

namespace jt {

using detail::with_ops;

Echelon rref(const Matrix& m) {
  Echelon e{m, {}};
  e.pivots = with_ops(e.reduced, [&](const auto& ops, auto& data) {
    return detail::rref_in_place(ops, data, m.rows(), m.cols(), m.cols());
  });
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(n, free_cols.size(), m.field());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t f = free_cols[t];
    k.set(f, t, 1L);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (e.reduced.entry_is_zero(i, f)) continue;
      k.set(e.pivots[i], t, -e.reduced.at(i, f));
    }
  }
  return k;
}

Matrix image_basis(const Matrix& m) { return m.select_cols(rref(m).pivots); }

namespace {

Scalar bareiss_rational(const Matrix& m) {
  const std::size_t n = m.rows();
  const auto& src = m.rational_data();
  std::vector<mpz_class> a(n * n);
  mpq_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), src[i * n + j].get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& x = src[i * n + j];
      a[i * n + j] = x.get_num() * (l / x.get_den());
    }
    scale *= l;
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return Scalar::zero(m.field());
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  mpq_class det(n == 0 ? mpz_class(1) : a[n * n - 1]);
  det *= sign;
  det /= scale;
  return Scalar(m.field(), det);
}

Scalar det_residue(const Matrix& m) {
  const std::size_t n = m.rows();
  const std::uint32_t p = m.field().p;
  detail::ResidueOps ops{p};
  auto a = m.residue_data();
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return Scalar::zero(m.field());
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
      det = (p - det) % p;
    }
    std::uint32_t d = a[k * n + k];
    det = det * d % p;
    std::uint32_t inv = mod_inverse(d, p);
    std::span<const std::uint32_t> prow(a.data() + k * n, n);
    for (std::size_t i = k + 1; i < n; ++i) {
      std::uint32_t f = mod_mul(a[i * n + k], inv, p);
      ops.sub_mul(std::span<std::uint32_t>(a.data() + i * n, n), prow, f);
    }
  }
  return Scalar::from_residue(m.field(), static_cast<std::uint32_t>(det));
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  return m.field().is_rational() ? bareiss_rational(m) : det_residue(m);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug = Matrix::hcat(m, Matrix::identity(n, m.field()));
  auto piv = with_ops(aug, [&](const auto& ops, auto& data) {
    return detail::rref_in_place(ops, data, n, 2 * n, n);
  });
  if (piv.size() != n) throw std::domain_error("matrix is singular");
  return aug.block(0, n, n, n);
}

std::vector<std::size_t> greedy_independent_columns(const Matrix& m, std::span<const std::size_t> order) {
  std::vector<std::size_t> chosen;
  with_ops(m, [&](const auto& ops, const auto& data) {
    using Ops = std::decay_t<decltype(ops)>;
    detail::IncrementalSpan<Ops> span(ops, m.rows());
    for (auto c : order) {
      if (c >= m.cols()) throw std::out_of_range("column order index");
      std::vector<typename Ops::T> v(m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i) v[i] = data[i * m.cols() + c];
      if (span.add(std::move(v))) chosen.push_back(c);
    }
    return 0;
  });
  return chosen;
}

Matrix generalized_inverse(const Matrix& m, std::span<const std::size_t> row_order,
                           std::span<const std::size_t> col_order) {
  auto cols = greedy_independent_columns(m, col_order);
  auto rows = greedy_independent_columns(m.transpose(), row_order);
  if (rows.size() != cols.size()) throw std::logic_error("row and column rank disagree");
  Matrix g(m.cols(), m.rows(), m.field());
  if (cols.empty()) return g;
  Matrix inv = inverse(m.select_rows(rows).select_cols(cols));
  for (std::size_t a = 0; a < cols.size(); ++a)
    for (std::size_t b = 0; b < rows.size(); ++b) g.set(cols[a], rows[b], inv.at(a, b));
  return g;
}

Matrix generalized_inverse(const Matrix& m) {
  auto ro = identity_order(m.rows());
  auto co = identity_order(m.cols());
  return generalized_inverse(m, ro, co);
}

Matrix extend_to_complement(const Matrix& b, const Matrix& k) {
  if (b.rows() != k.rows()) throw std::invalid_argument("extend_to_complement: ambient mismatch");
  if (!(b.field() == k.field())) throw std::invalid_argument("extend_to_complement: field mismatch");
  if (rank(b) != b.cols()) throw PreconditionError("extend_to_complement: B is not independent");
  if (rank(Matrix::hcat(k, b)) != rank(k))
    throw PreconditionError("extend_to_complement: B is not contained in span(K)");
  Matrix joined = Matrix::hcat(b, k);
  auto order = identity_order(joined.cols());
  auto chosen = greedy_independent_columns(joined, order);
  std::vector<std::size_t> picked;
  for (auto c : chosen)
    if (c >= b.cols()) picked.push_back(c - b.cols());
  return k.select_cols(picked);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols(), q = b.cols();
  Matrix aug = Matrix::hcat(a, b);
  auto piv = with_ops(aug, [&](const auto& ops, auto& data) {
    return detail::rref_in_place(ops, data, a.rows(), n + q, n + q);
  });
  Matrix x(n, q, a.field());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < q; ++j) x.set(piv[i], j, aug.at(i, n + j));
  }
  return x;
}

Matrix left_inverse(const Matrix& w) {
  auto order = identity_order(w.rows());
  auto rows = greedy_independent_columns(w.transpose(), order);
  if (rows.size() != w.cols()) throw std::domain_error("left_inverse: columns are dependent");
  Matrix inv = inverse(w.select_rows(rows));
  Matrix l(w.cols(), w.rows(), w.field());
  for (std::size_t b = 0; b < rows.size(); ++b)
    for (std::size_t a = 0; a < w.cols(); ++a) l.set(a, rows[b], inv.at(a, b));
  return l;
}

Matrix span_intersection(const Matrix& a, const Matrix& b) {
  Matrix joined = Matrix::hcat(a, -b);
  Matrix k = kernel_basis(joined);
  Matrix v = a * k.block(0, 0, a.cols(), k.cols());
  return image_basis(v);
}

Matrix span_sum(const Matrix& a, const Matrix& b) { return image_basis(Matrix::hcat(a, b)); }

QuotientSpace::QuotientSpace(const Matrix& sub, const Matrix& super)
    : sub_(sub), reps_(extend_to_complement(sub, super)) {
  basis_ = Matrix::hcat(sub_, reps_);
  left_inv_ = left_inverse(basis_);
}

bool QuotientSpace::contains(const Matrix& vectors) const {
  return basis_ * (left_inv_ * vectors) == vectors;
}

Matrix QuotientSpace::coordinates(const Matrix& vectors) const {
  Matrix y = left_inv_ * vectors;
  if (!(basis_ * y == vectors)) throw PreconditionError("vector is not in the ambient subspace");
  return y.block(sub_.cols(), 0, reps_.cols(), vectors.cols());
}

}  // namespace jt
