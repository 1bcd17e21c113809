#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jt/field.hpp"
#include "jt/matrix.hpp"

namespace jt {

// Univariate polynomial in z, coefficients low to high, no trailing zeros.
class Poly {
 public:
  Poly() : Poly(FieldSpec::rationals()) {}
  explicit Poly(FieldSpec f) : field_(f) {}
  Poly(FieldSpec f, std::vector<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  static Poly constant(FieldSpec f, long c) { return constant(Scalar(f, c)); }
  static Poly monomial(const Scalar& c, std::size_t degree);
  static Poly z(FieldSpec f) { return monomial(Scalar::one(f), 1); }
  static Poly linear(const Scalar& root);  // z - root
  static Poly from_ints(FieldSpec f, const std::vector<long>& coeffs);

  FieldSpec field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field_); }
  const Scalar& lead() const { return c_.back(); }

  Scalar eval(const Scalar& x) const;
  Matrix eval(const Matrix& x) const;  // Horner on a square matrix
  Poly monic() const;
  Poly pow(unsigned k) const;
  Poly scaled(const Scalar& s) const;
  // f(z + a)
  Poly translate(const Scalar& a) const;
  // Multiplicity of the root r.
  unsigned order_at(const Scalar& r) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  // Quotient and remainder; throws on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  std::string to_string() const;

 private:
  void trim();
  FieldSpec field_;
  std::vector<Scalar> c_;
};

// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
// Inverse of a modulo m; throws if they share a factor.
Poly inverse_mod(const Poly& a, const Poly& m);

// lead * prod (z - root)^mult.
struct FactoredPoly {
  Scalar lead;
  std::vector<std::pair<Scalar, unsigned>> roots;

  Poly expand() const;
  FactoredPoly normalized() const;  // merges repeated roots, drops zero multiplicities
  FieldSpec field() const { return lead.field(); }
};

// Dense matrix of polynomials; mirrors the Matrix interface used by the
// generic complex code.
class PolyMatrix {
 public:
  PolyMatrix() : PolyMatrix(0, 0, FieldSpec::rationals()) {}
  PolyMatrix(std::size_t rows, std::size_t cols, FieldSpec f);

  static PolyMatrix identity(std::size_t n, FieldSpec f);
  static PolyMatrix from_matrix(const Matrix& m);
  static PolyMatrix column_vector(const std::vector<Poly>& v, FieldSpec f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldSpec field() const { return field_; }

  const Poly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Poly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Poly p);

  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b);
  PolyMatrix select_rows(std::span<const std::size_t> idx) const;
  PolyMatrix select_cols(std::span<const std::size_t> idx) const;
  PolyMatrix transpose() const;
  static PolyMatrix hcat(const PolyMatrix& a, const PolyMatrix& b);
  static PolyMatrix block_diag(const std::vector<PolyMatrix>& blocks, FieldSpec f);

  PolyMatrix operator-() const;
  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix scaled(const Poly& p) const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  bool is_zero() const;
  bool is_identity() const;
  std::string to_string() const;

 private:
  void check_shape(const PolyMatrix& o, const char* what) const;
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> e_;
};

// Multivariate polynomial: exponent vector -> coefficient.
class MultiPoly {
 public:
  MultiPoly(FieldSpec f, std::size_t nvars) : field_(f), n_(nvars) {}
  void add_term(std::vector<unsigned> exponents, const Scalar& c);

  FieldSpec field() const { return field_; }
  std::size_t nvars() const { return n_; }
  const std::map<std::vector<unsigned>, Scalar>& terms() const { return terms_; }

  Scalar eval(const std::vector<Scalar>& point) const;
  // Univariate restriction z -> f(point with coordinate k replaced by point_k + z).
  Poly restrict_line(const std::vector<Scalar>& point, std::size_t k) const;

 private:
  FieldSpec field_;
  std::size_t n_;
  std::map<std::vector<unsigned>, Scalar> terms_;
};

}  // namespace jt
