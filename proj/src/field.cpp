#include "jt/field.hpp"

#include <ostream>

#include "jt/errors.hpp"

namespace jt {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw PreconditionError("characteristic must be a prime below 2^31, got " + std::to_string(p));
  return {Kind::prime, p};
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p) + ")";
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero");
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce_mod(const mpq_class& q, std::uint32_t p) {
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw PreconditionError("denominator vanishes modulo " + std::to_string(p));
  auto n = static_cast<std::uint32_t>(num.get_ui());
  auto d = static_cast<std::uint32_t>(den.get_ui());
  return mod_mul(n, mod_inverse(d, p), p);
}

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    long r = value % static_cast<long>(field.p);
    if (r < 0) r += field.p;
    value_ = static_cast<std::uint32_t>(r);
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    mpq_class v = value;
    v.canonicalize();
    value_ = std::move(v);
  } else {
    value_ = reduce_mod(value, field.p);
  }
}

Scalar Scalar::from_residue(FieldSpec f, std::uint32_t r) {
  Scalar s;
  s.field_ = f;
  s.value_ = r % f.p;
  return s;
}

Scalar Scalar::parse(FieldSpec f, std::string_view text) {
  std::string s(text);
  // Normalise the typographic minus sign.
  const std::string minus = "\xE2\x88\x92";
  if (s.rfind(minus, 0) == 0) s = "-" + s.substr(minus.size());
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed field element \"" + std::string(text) + "\"");
  mpz_class zn(num), zd(den);
  if (zd == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  mpq_class q(zn, zd);
  q.canonicalize();
  if (!f.is_rational() && mpz_class(q.get_den() % f.p) == 0)
    throw ParseError("denominator of \"" + std::string(text) + "\" vanishes in " + f.name());
  return Scalar(f, q);
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(rational()) == 0;
  return residue() == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return rational() == 1;
  return residue() == 1;
}

int Scalar::sign() const {
  if (field_.is_rational()) return sgn(rational());
  return residue() == 0 ? 0 : 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1) / rational());
  return from_residue(field_, mod_inverse(residue(), field_.p));
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar acc = one(field_);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch in scalar arithmetic");
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-rational()));
  return from_residue(field_, residue() == 0 ? 0 : field_.p - residue());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += o.rational();
  } else {
    std::uint64_t s = std::uint64_t(residue()) + o.residue();
    value_ = static_cast<std::uint32_t>(s % field_.p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= o.rational();
  } else {
    std::uint64_t s = std::uint64_t(residue()) + field_.p - o.residue();
    value_ = static_cast<std::uint32_t>(s % field_.p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    std::get<mpq_class>(value_) *= o.rational();
  else
    value_ = mod_mul(residue(), o.residue(), field_.p);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return rational().get_str();
  return std::to_string(residue());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace jt
