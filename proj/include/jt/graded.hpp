#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jt/errors.hpp"
#include "jt/linalg.hpp"
#include "jt/matrix.hpp"

namespace jt {

enum class Part : std::uint8_t { plus = 0, minus = 1 };

inline constexpr std::array<Part, 2> kParts{Part::plus, Part::minus};
inline Part flip(Part p) { return p == Part::plus ? Part::minus : Part::plus; }
inline std::size_t index(Part p) { return static_cast<std::size_t>(p); }
inline const char* part_name(Part p) { return p == Part::plus ? "plus" : "minus"; }

struct GradedSpace {
  std::size_t plus = 0, minus = 0;

  std::size_t dim(Part p) const { return p == Part::plus ? plus : minus; }
  std::size_t total() const { return plus + minus; }
  GradedSpace shifted() const { return {minus, plus}; }
  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;
};

inline GradedSpace operator+(GradedSpace a, GradedSpace b) { return {a.plus + b.plus, a.minus + b.minus}; }

// A homogeneous map between graded spaces. part[s] sends the s-component of the
// source to the (s xor odd)-component of the target, so for odd maps part[plus]
// is the usual alpha_+ : V_+ -> W_- and part[minus] is alpha_- : V_- -> W_+.
// M is Matrix (vector spaces) or PolyMatrix (free modules over F[z]).
template <class M>
struct GradedMapT {
  GradedSpace src, tgt;
  bool odd = true;
  std::array<M, 2> part;

  static GradedMapT make_odd(M plus, M minus) {
    GradedSpace s{plus.cols(), minus.cols()}, t{minus.rows(), plus.rows()};
    return {s, t, true, {std::move(plus), std::move(minus)}};
  }
  static GradedMapT make_even(M plus, M minus) {
    GradedSpace s{plus.cols(), minus.cols()}, t{plus.rows(), minus.rows()};
    return {s, t, false, {std::move(plus), std::move(minus)}};
  }
  static GradedMapT zero(GradedSpace src, GradedSpace tgt, bool odd, FieldSpec f) {
    GradedMapT m{src, tgt, odd, {}};
    for (Part s : kParts) m.part[index(s)] = M(tgt.dim(m.target_part(s)), src.dim(s), f);
    return m;
  }
  static GradedMapT identity(GradedSpace s, FieldSpec f) {
    return make_even(M::identity(s.plus, f), M::identity(s.minus, f));
  }

  Part target_part(Part s) const { return odd ? flip(s) : s; }
  const M& plus() const { return part[0]; }
  const M& minus() const { return part[1]; }
  const M& at(Part s) const { return part[index(s)]; }
  FieldSpec field() const { return part[0].field(); }

  bool is_zero() const { return part[0].is_zero() && part[1].is_zero(); }

  GradedMapT operator-() const { return {src, tgt, odd, {-part[0], -part[1]}}; }
  GradedMapT& operator+=(const GradedMapT& o) {
    check_compatible(o);
    part[0] += o.part[0];
    part[1] += o.part[1];
    return *this;
  }
  GradedMapT& operator-=(const GradedMapT& o) {
    check_compatible(o);
    part[0] -= o.part[0];
    part[1] -= o.part[1];
    return *this;
  }
  friend GradedMapT operator+(GradedMapT a, const GradedMapT& b) { return a += b; }
  friend GradedMapT operator-(GradedMapT a, const GradedMapT& b) { return a -= b; }
  friend bool operator==(const GradedMapT& a, const GradedMapT& b) {
    return a.src == b.src && a.tgt == b.tgt && a.odd == b.odd && a.part[0] == b.part[0] &&
           a.part[1] == b.part[1];
  }

  void check_compatible(const GradedMapT& o) const {
    if (!(src == o.src) || !(tgt == o.tgt) || odd != o.odd)
      throw std::invalid_argument("graded maps are not of the same type");
  }
};

// g after f.
template <class M>
GradedMapT<M> compose(const GradedMapT<M>& g, const GradedMapT<M>& f) {
  if (!(g.src == f.tgt)) throw std::invalid_argument("compose: source/target mismatch");
  GradedMapT<M> out{f.src, g.tgt, f.odd != g.odd, {}};
  for (Part s : kParts) out.part[index(s)] = g.at(f.target_part(s)) * f.at(s);
  return out;
}

template <class M>
GradedMapT<M> operator*(const GradedMapT<M>& g, const GradedMapT<M>& f) {
  return compose(g, f);
}

template <class M>
struct ComplexT {
  GradedSpace space;
  GradedMapT<M> d;  // odd endomorphism of space with d*d = 0

  FieldSpec field() const { return d.field(); }

  static ComplexT zero(GradedSpace s, FieldSpec f) { return {s, GradedMapT<M>::zero(s, s, true, f)}; }
};

class ComplexError : public PreconditionError {
 public:
  ComplexError(Part p, const std::string& what) : PreconditionError(what), parity(p) {}
  Part parity;
};

// Validates shapes and d^2 = 0. The reported parity is the source component on
// which d*d fails to vanish.
template <class M>
ComplexT<M> make_complex(GradedSpace space, GradedMapT<M> d) {
  if (!d.odd) throw std::invalid_argument("differential must be odd");
  if (!(d.src == space) || !(d.tgt == space)) throw std::invalid_argument("differential shape mismatch");
  for (Part s : kParts) {
    const M& first = d.at(s);
    const M& second = d.at(flip(s));
    if (!(second * first).is_zero())
      throw ComplexError(s, std::string("d^2 != 0 on the ") + part_name(s) + " component");
  }
  return {space, std::move(d)};
}

// Grading reversed, differential negated.
template <class M>
ComplexT<M> shift(const ComplexT<M>& c) {
  GradedSpace s = c.space.shifted();
  return {s, GradedMapT<M>::make_odd(-c.d.minus(), -c.d.plus())};
}

template <class M>
GradedMapT<M> direct_sum_maps(const std::vector<GradedMapT<M>>& maps, FieldSpec f) {
  if (maps.empty()) throw std::invalid_argument("direct sum of no maps");
  bool odd = maps.front().odd;
  std::array<std::vector<M>, 2> blocks;
  GradedSpace src, tgt;
  for (const auto& m : maps) {
    if (m.odd != odd) throw std::invalid_argument("direct sum of maps with different parity");
    if (!(m.field() == f)) throw std::invalid_argument("direct sum field mismatch");
    for (Part s : kParts) blocks[index(s)].push_back(m.at(s));
    src = src + m.src;
    tgt = tgt + m.tgt;
  }
  return {src, tgt, odd, {M::block_diag(blocks[0], f), M::block_diag(blocks[1], f)}};
}

template <class M>
ComplexT<M> direct_sum(const std::vector<ComplexT<M>>& cs) {
  if (cs.empty()) throw std::invalid_argument("direct sum of no complexes");
  FieldSpec f = cs.front().field();
  std::vector<GradedMapT<M>> ds;
  for (const auto& c : cs) {
    if (!(c.field() == f)) throw std::invalid_argument("direct sum of complexes over different fields");
    ds.push_back(c.d);
  }
  auto d = direct_sum_maps(ds, f);
  return {d.src, d};
}

// True iff d_D phi + phi d_C = 0 (odd phi) or d_D phi - phi d_C = 0 (even phi).
template <class M>
bool is_chain_map(const GradedMapT<M>& phi, const ComplexT<M>& c, const ComplexT<M>& d) {
  if (!(phi.src == c.space) || !(phi.tgt == d.space)) throw std::invalid_argument("chain map shape mismatch");
  auto lhs = compose(d.d, phi);
  auto rhs = compose(phi, c.d);
  return phi.odd ? (lhs + rhs).is_zero() : (lhs - rhs).is_zero();
}

template <class M>
bool check_odd_chain_map(const GradedMapT<M>& phi, const ComplexT<M>& c, const ComplexT<M>& d) {
  if (!phi.odd) throw std::invalid_argument("check_odd_chain_map: map is even");
  return is_chain_map(phi, c, d);
}

using GradedMap = GradedMapT<Matrix>;
using Complex2 = ComplexT<Matrix>;

// Homology of a complex of finite-dimensional spaces with the standard basis:
// boundaries from image_basis of the incoming differential, completed inside
// kernel_basis of the outgoing one by greedy extension.
class HomologyData {
 public:
  explicit HomologyData(const Complex2& c);

  const Complex2& complex() const { return complex_; }
  FieldSpec field() const { return complex_.field(); }
  std::size_t dim(Part p) const { return q_[index(p)].dim(); }
  GradedSpace dims() const { return {dim(Part::plus), dim(Part::minus)}; }
  bool is_zero() const { return dims().total() == 0; }

  const Matrix& representatives(Part p) const { return q_[index(p)].representatives(); }
  const Matrix& boundaries(Part p) const { return q_[index(p)].sub_basis(); }
  bool is_cycle(Part p, const Matrix& vectors) const;
  // Homology coordinates of each column; throws PreconditionError on non-cycles.
  Matrix reduce(Part p, const Matrix& cycles) const;

 private:
  Complex2 complex_;
  std::array<QuotientSpace, 2> q_;
};

HomologyData homology(const Complex2& c);

// The map induced on homology, as a graded map between the homology spaces in
// their standard bases. H is HomologyData or TorsionModuleHomology.
template <class M, class H>
GradedMap induced_on_homology(const GradedMapT<M>& phi, const H& src, const H& tgt) {
  if (!is_chain_map(phi, src.complex(), tgt.complex())) throw PreconditionError("map is not a chain map");
  GradedMap out{src.dims(), tgt.dims(), phi.odd, {}};
  for (Part s : kParts) out.part[index(s)] = tgt.reduce(phi.target_part(s), phi.at(s) * src.representatives(s));
  return out;
}

}  // namespace jt
