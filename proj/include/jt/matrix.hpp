#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "jt/field.hpp"

namespace jt {

// Dense row-major matrix over a runtime-selected field. Rational entries are
// GMP fractions; prime-field entries are 32-bit residues.
class Matrix {
 public:
  using RationalData = std::vector<mpq_class>;
  using ResidueData = std::vector<std::uint32_t>;

  Matrix() : Matrix(0, 0, FieldSpec::rationals()) {}
  Matrix(std::size_t rows, std::size_t cols, FieldSpec field);

  static Matrix identity(std::size_t n, FieldSpec field);
  static Matrix from_rows(FieldSpec field, const std::vector<std::vector<long>>& rows);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, FieldSpec field);
  static Matrix column_vector(FieldSpec field, const std::vector<Scalar>& values);
  static Matrix diagonal(FieldSpec field, const std::vector<Scalar>& values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldSpec field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void set(std::size_t i, std::size_t j, long v) { set(i, j, Scalar(field_, v)); }
  bool entry_is_zero(std::size_t i, std::size_t j) const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_cols(std::span<const std::size_t> idx) const;
  Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }
  Matrix transpose() const;

  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);
  static Matrix block_diag(const std::vector<Matrix>& blocks, FieldSpec field);

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  bool is_zero() const;
  bool is_identity() const;
  std::string to_string() const;

  // Raw storage for elimination kernels.
  RationalData& rational_data() { return std::get<RationalData>(data_); }
  const RationalData& rational_data() const { return std::get<RationalData>(data_); }
  ResidueData& residue_data() { return std::get<ResidueData>(data_); }
  const ResidueData& residue_data() const { return std::get<ResidueData>(data_); }

 private:
  void check_shape(const Matrix& o, const char* what) const;

  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::variant<RationalData, ResidueData> data_;
};

}  // namespace jt
