#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace jt {

// Ground field: the rationals or a prime field GF(p) with p < 2^31.
struct FieldSpec {
  enum class Kind : std::uint8_t { rational, prime };

  Kind kind = Kind::rational;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(std::uint32_t p);

  bool is_rational() const { return kind == Kind::rational; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint32_t n);

// An exact element of a FieldSpec. Rationals are kept canonical (lowest
// terms, positive denominator); residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec f) { return Scalar(f, 0L); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1L); }
  static Scalar from_residue(FieldSpec f, std::uint32_t r);
  // Accepts "a", "-a", "a/b" with ASCII or U+2212 minus; throws ParseError.
  static Scalar parse(FieldSpec f, std::string_view text);

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  int sign() const;  // over GF(p): 0 or 1

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }

  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  FieldSpec field_{};
  std::variant<mpq_class, std::uint32_t> value_{mpq_class(0)};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce_mod(const mpq_class& q, std::uint32_t p);

}  // namespace jt
