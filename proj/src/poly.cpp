#include "jt/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "jt/errors.hpp"

namespace jt {

Poly::Poly(FieldSpec f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!(c.field() == f)) throw std::invalid_argument("polynomial coefficient field mismatch");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1, Scalar::zero(c.field()));
  v[degree] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::linear(const Scalar& root) { return Poly(root.field(), {-root, Scalar::one(root.field())}); }

Poly Poly::from_ints(FieldSpec f, const std::vector<long>& coeffs) {
  std::vector<Scalar> v;
  for (long c : coeffs) v.emplace_back(f, c);
  return Poly(f, std::move(v));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Poly::eval(const Matrix& x) const {
  if (x.rows() != x.cols()) throw std::invalid_argument("polynomial of a non-square matrix");
  Matrix acc(x.rows(), x.cols(), field_);
  Matrix id = Matrix::identity(x.rows(), field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + id.scaled(*it);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

Poly Poly::pow(unsigned k) const {
  Poly acc = constant(field_, 1), base = *this;
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Poly Poly::scaled(const Scalar& s) const {
  std::vector<Scalar> v = c_;
  for (auto& c : v) c *= s;
  return Poly(field_, std::move(v));
}

Poly Poly::translate(const Scalar& a) const {
  // Horner with (z + a).
  Poly za(field_, {a, Scalar::one(field_)});
  Poly acc(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * za + constant(*it);
  return acc;
}

unsigned Poly::order_at(const Scalar& r) const {
  if (is_zero()) throw std::domain_error("order of the zero polynomial");
  unsigned k = 0;
  Poly f = *this;
  Poly lin = linear(r);
  for (;;) {
    auto [q, rem] = f.divmod(lin);
    if (!rem.is_zero()) return k;
    f = q;
    ++k;
  }
}

Poly Poly::operator-() const { return scaled(-Scalar::one(field_)); }

Poly& Poly::operator+=(const Poly& o) {
  if (!(field_ == o.field_)) throw std::invalid_argument("polynomial field mismatch");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!(field_ == o.field_)) throw std::invalid_argument("polynomial field mismatch");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) throw std::invalid_argument("polynomial field mismatch");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(a.field_, std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!(field_ == d.field_)) throw std::invalid_argument("polynomial field mismatch");
  if (degree() < d.degree()) return {Poly(field_), *this};
  std::vector<Scalar> r = c_;
  std::vector<Scalar> q(c_.size() - d.c_.size() + 1, Scalar::zero(field_));
  Scalar inv = d.lead().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Scalar& top = r[k + d.c_.size() - 1];
    if (top.is_zero()) continue;
    Scalar f = top * inv;
    q[k] = f;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= f * d.c_[j];
  }
  r.resize(d.c_.size() - 1, Scalar::zero(field_));
  return {Poly(field_, std::move(q)), Poly(field_, std::move(r))};
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string c = c_[i].to_string();
    bool neg = field_.is_rational() && c_[i].sign() < 0;
    if (neg) c = c.substr(1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (i == 0 || c != "1") os << c << (i ? "*" : "");
    if (i >= 1) os << "z";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  FieldSpec f = m.field();
  Poly r0 = m, r1 = a % m, s0(f), s1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("polynomial is not invertible modulo m");
  return (s0.scaled(r0.lead().inverse())) % m;
}

Poly FactoredPoly::expand() const {
  Poly p = Poly::constant(lead);
  for (const auto& [r, k] : roots) p *= Poly::linear(r).pow(k);
  return p;
}

FactoredPoly FactoredPoly::normalized() const {
  FactoredPoly out{lead, {}};
  for (const auto& [r, k] : roots) {
    if (k == 0) continue;
    bool merged = false;
    for (auto& [r2, k2] : out.roots)
      if (r2 == r) {
        k2 += k;
        merged = true;
      }
    if (!merged) out.roots.emplace_back(r, k);
  }
  return out;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, FieldSpec f)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Poly(f)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, FieldSpec f) {
  PolyMatrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(f, 1);
  return m;
}

PolyMatrix PolyMatrix::from_matrix(const Matrix& a) {
  PolyMatrix m(a.rows(), a.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = Poly::constant(a.at(i, j));
  return m;
}

PolyMatrix PolyMatrix::column_vector(const std::vector<Poly>& v, FieldSpec f) {
  PolyMatrix m(v.size(), 1, f);
  for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
  return m;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Poly p) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("poly matrix index");
  if (!(p.field() == field_)) throw std::invalid_argument("poly matrix field mismatch");
  e_[i * cols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside poly matrix");
  PolyMatrix out(nr, nc, field_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = at(r0 + i, c0 + j);
  return out;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("block outside poly matrix");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

PolyMatrix PolyMatrix::select_rows(std::span<const std::size_t> idx) const {
  PolyMatrix out(idx.size(), cols_, field_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(idx[i], j);
  return out;
}

PolyMatrix PolyMatrix::select_cols(std::span<const std::size_t> idx) const {
  PolyMatrix out(rows_, idx.size(), field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out.at(i, j) = at(i, idx[j]);
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

PolyMatrix PolyMatrix::hcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hcat row mismatch");
  PolyMatrix out(a.rows_, a.cols_ + b.cols_, a.field_);
  out.set_block(0, 0, a);
  out.set_block(0, a.cols_, b);
  return out;
}

PolyMatrix PolyMatrix::block_diag(const std::vector<PolyMatrix>& blocks, FieldSpec f) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows_, c += b.cols_;
  PolyMatrix out(r, c, f);
  r = c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows_;
    c += b.cols_;
  }
  return out;
}

void PolyMatrix::check_shape(const PolyMatrix& o, const char* what) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument(std::string("shape mismatch in ") + what);
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& p : out.e_) p = -p;
  return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  check_shape(o, "poly matrix addition");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  check_shape(o, "poly matrix subtraction");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (!(a.field_ == b.field_) || a.cols_ != b.rows_) throw std::invalid_argument("poly matrix product shape");
  PolyMatrix c(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Poly& y = b.at(k, j);
        if (!y.is_zero()) c.at(i, j) += x * y;
      }
    }
  return c;
}

PolyMatrix PolyMatrix::scaled(const Poly& p) const {
  PolyMatrix out = *this;
  for (auto& e : out.e_) e = e * p;
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Poly& p = at(i, j);
      if (i == j ? !(p.degree() == 0 && p.lead().is_one()) : !p.is_zero()) return false;
    }
  return true;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

void MultiPoly::add_term(std::vector<unsigned> exponents, const Scalar& c) {
  if (exponents.size() != n_) throw std::invalid_argument("exponent vector has the wrong length");
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(std::move(exponents), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
  if (point.size() != n_) throw std::invalid_argument("evaluation point has the wrong dimension");
  Scalar acc = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t k = 0; k < n_; ++k) t *= point[k].pow(e[k]);
    acc += t;
  }
  return acc;
}

Poly MultiPoly::restrict_line(const std::vector<Scalar>& point, std::size_t k) const {
  if (point.size() != n_ || k >= n_) throw std::invalid_argument("restriction point has the wrong dimension");
  Poly acc(field_);
  Poly shifted(field_, {point[k], Scalar::one(field_)});  // point_k + z
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < n_; ++i)
      if (i != k) t *= point[i].pow(e[i]);
    acc += shifted.pow(e[k]).scaled(t);
  }
  return acc;
}

}  // namespace jt
