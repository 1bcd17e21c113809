#include "jt/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "jt/kernels.hpp"

namespace jt {

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : field_(field), rows_(rows), cols_(cols) {
  if (field.is_rational())
    data_ = RationalData(rows * cols);
  else
    data_ = ResidueData(rows * cols, 0u);
}

Matrix Matrix::identity(std::size_t n, FieldSpec field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1L);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), c, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, FieldSpec field) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), c, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::column_vector(FieldSpec field, const std::vector<Scalar>& values) {
  Matrix m(values.size(), 1, field);
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, 0, values[i]);
  return m;
}

Matrix Matrix::diagonal(FieldSpec field, const std::vector<Scalar>& values) {
  Matrix m(values.size(), values.size(), field);
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, i, values[i]);
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
  if (field_.is_rational()) return Scalar(field_, rational_data()[i * cols_ + j]);
  return Scalar::from_residue(field_, residue_data()[i * cols_ + j]);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
  if (!(v.field() == field_)) throw std::invalid_argument("field mismatch in Matrix::set");
  if (field_.is_rational())
    rational_data()[i * cols_ + j] = v.rational();
  else
    residue_data()[i * cols_ + j] = v.residue();
}

bool Matrix::entry_is_zero(std::size_t i, std::size_t j) const {
  if (field_.is_rational()) return sgn(rational_data()[i * cols_ + j]) == 0;
  return residue_data()[i * cols_ + j] == 0;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
  Matrix out(nr, nc, field_);
  std::visit(
      [&](const auto& src) {
        auto& dst = std::get<std::decay_t<decltype(src)>>(out.data_);
        for (std::size_t i = 0; i < nr; ++i)
          for (std::size_t j = 0; j < nc; ++j) dst[i * nc + j] = src[(r0 + i) * cols_ + c0 + j];
      },
      data_);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (!(b.field_ == field_)) throw std::invalid_argument("field mismatch in set_block");
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("block outside matrix");
  std::visit(
      [&](auto& dst) {
        const auto& src = std::get<std::decay_t<decltype(dst)>>(b.data_);
        for (std::size_t i = 0; i < b.rows_; ++i)
          for (std::size_t j = 0; j < b.cols_; ++j) dst[(r0 + i) * cols_ + c0 + j] = src[i * b.cols_ + j];
      },
      data_);
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix out(idx.size(), cols_, field_);
  std::visit(
      [&](const auto& src) {
        auto& dst = std::get<std::decay_t<decltype(src)>>(out.data_);
        for (std::size_t i = 0; i < idx.size(); ++i) {
          if (idx[i] >= rows_) throw std::out_of_range("row index");
          for (std::size_t j = 0; j < cols_; ++j) dst[i * cols_ + j] = src[idx[i] * cols_ + j];
        }
      },
      data_);
  return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  Matrix out(rows_, idx.size(), field_);
  std::visit(
      [&](const auto& src) {
        auto& dst = std::get<std::decay_t<decltype(src)>>(out.data_);
        for (std::size_t j = 0; j < idx.size(); ++j) {
          if (idx[j] >= cols_) throw std::out_of_range("column index");
          for (std::size_t i = 0; i < rows_; ++i) dst[i * idx.size() + j] = src[i * cols_ + idx[j]];
        }
      },
      data_);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, field_);
  std::visit(
      [&](const auto& src) {
        auto& dst = std::get<std::decay_t<decltype(src)>>(out.data_);
        for (std::size_t i = 0; i < rows_; ++i)
          for (std::size_t j = 0; j < cols_; ++j) dst[j * rows_ + i] = src[i * cols_ + j];
      },
      data_);
  return out;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hcat row mismatch");
  Matrix out(a.rows_, a.cols_ + b.cols_, a.field_);
  out.set_block(0, 0, a);
  out.set_block(0, a.cols_, b);
  return out;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vcat column mismatch");
  Matrix out(a.rows_ + b.rows_, a.cols_, a.field_);
  out.set_block(0, 0, a);
  out.set_block(a.rows_, 0, b);
  return out;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks, FieldSpec field) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows_, c += b.cols_;
  Matrix out(r, c, field);
  r = c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows_;
    c += b.cols_;
  }
  return out;
}

void Matrix::check_shape(const Matrix& o, const char* what) const {
  if (!(field_ == o.field_)) throw std::invalid_argument(std::string("field mismatch in ") + what);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument(std::string("shape mismatch in ") + what);
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  if (field_.is_rational()) {
    for (auto& x : out.rational_data()) x = -x;
  } else {
    for (auto& x : out.residue_data()) x = x == 0 ? 0 : field_.p - x;
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  check_shape(o, "matrix addition");
  if (field_.is_rational()) {
    auto& d = rational_data();
    const auto& s = o.rational_data();
    for (std::size_t k = 0; k < d.size(); ++k) d[k] += s[k];
  } else {
    kernels::axpy_mod(residue_data(), o.residue_data(), 1, field_.p);
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  check_shape(o, "matrix subtraction");
  if (field_.is_rational()) {
    auto& d = rational_data();
    const auto& s = o.rational_data();
    for (std::size_t k = 0; k < d.size(); ++k) d[k] -= s[k];
  } else {
    kernels::axpy_mod(residue_data(), o.residue_data(), field_.p - 1, field_.p);
  }
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw std::invalid_argument("field mismatch in matrix product");
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in matrix product");
  const std::size_t n = a.rows_, m = a.cols_, q = b.cols_;
  Matrix c(n, q, a.field_);
  if (a.field_.is_rational()) {
    const auto& A = a.rational_data();
    const auto& B = b.rational_data();
    auto& C = c.rational_data();
    mpq_class t;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        const mpq_class& x = A[i * m + k];
        if (sgn(x) == 0) continue;
        for (std::size_t j = 0; j < q; ++j) {
          const mpq_class& y = B[k * q + j];
          if (sgn(y) == 0) continue;
          mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
          C[i * q + j] += t;
        }
      }
  } else {
    const auto& A = a.residue_data();
    const auto& B = b.residue_data();
    auto& C = c.residue_data();
    const std::uint32_t p = a.field_.p;
    for (std::size_t i = 0; i < n; ++i) {
      std::span<std::uint32_t> crow(C.data() + i * q, q);
      for (std::size_t k = 0; k < m; ++k) {
        std::uint32_t x = A[i * m + k];
        if (x == 0) continue;
        kernels::axpy_mod(crow, std::span<const std::uint32_t>(B.data() + k * q, q), x, p);
      }
    }
  }
  return c;
}

Matrix Matrix::scaled(const Scalar& s) const {
  if (!(s.field() == field_)) throw std::invalid_argument("field mismatch in scaling");
  Matrix out = *this;
  if (field_.is_rational()) {
    for (auto& x : out.rational_data()) x *= s.rational();
  } else {
    kernels::scale_mod(out.residue_data(), s.residue(), field_.p);
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool Matrix::is_zero() const {
  if (field_.is_rational()) {
    for (const auto& x : rational_data())
      if (sgn(x) != 0) return false;
  } else {
    for (auto x : residue_data())
      if (x != 0) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Scalar v = at(i, j);
      if (i == j ? !v.is_one() : !v.is_zero()) return false;
    }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace jt
