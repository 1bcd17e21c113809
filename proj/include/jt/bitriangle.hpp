#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jt/koszul.hpp"
#include "jt/torsion.hpp"

namespace jt {

template <class T>
using Grid = std::array<std::array<T, 3>, 3>;

inline std::size_t cyc(std::size_t i, long k) { return static_cast<std::size_t>((static_cast<long>(i) + k + 3) % 3); }

// An odd bitriangle of complexes, 0-based and cyclic in both directions.
//   v[i][j] : X[i][j] -> X[i+1][j]      t[i][j] : X[i+1][j] -> X[i][j]
//   h[i][j] : X[i][j] -> X[i][j+1]      r[i][j] : X[i][j+1] -> X[i][j]
//   s[i][j] : X[i][j] -> X[i+1][j+1]
template <class M>
struct BitriangleT {
  Grid<ComplexT<M>> X;
  Grid<GradedMapT<M>> v, h, s, t, r;

  TriangleT<M> column(std::size_t j) const {
    TriangleT<M> c;
    for (std::size_t i = 0; i < 3; ++i) c.X[i] = X[i][j];
    c.v = {v[0][j], v[1][j], v[2][j]};
    c.t = std::array<GradedMapT<M>, 3>{t[0][j], t[1][j], t[2][j]};
    return c;
  }
  TriangleT<M> row(std::size_t i) const {
    TriangleT<M> c;
    for (std::size_t j = 0; j < 3; ++j) c.X[j] = X[i][j];
    c.v = {h[i][0], h[i][1], h[i][2]};
    c.t = std::array<GradedMapT<M>, 3>{r[i][0], r[i][1], r[i][2]};
    return c;
  }
};

using Bitriangle = BitriangleT<Matrix>;

// i and j are 1-based; 0 where not applicable.
struct BitriangleCheck {
  std::string kind;  // shape, column, row, square, vertical-diagonal, horizontal-diagonal
  int i = 0, j = 0;
  bool ok = true;
  std::string detail;
};

struct BitriangleReport {
  std::vector<BitriangleCheck> checks;
  bool ok() const;
  std::vector<BitriangleCheck> failures() const;
  std::string summary() const;
};

// Cell homology dimensions and the maps induced by v and h, in the standard
// homology bases of the cells.
struct BitriangleHomology {
  Grid<GradedSpace> dims;
  Grid<GradedMap> v, h;
};

struct ComparisonReport {
  std::array<Scalar, 3> columns, rows;  // T(X_{*j}), T(X_{i*})
  Scalar T_v, T_h;                      // products of the above
  std::array<int, 2> theta_sign{1, 1};  // det(theta_+), det(theta_-)
  Scalar comparison;                    // T(v)/T(h) on H(D1)+H(D2)+H(D3)
  Scalar via_quotients, det_plus, det_minus;
  Grid<GradedSpace> dims;
  bool corollary = false;  // T_v = det(theta_-)^{-1} T_h det(theta_+)
  bool verdict = false;

  int theta() const { return theta_sign[0] * theta_sign[1]; }
};

// Cells of D_k (k = 0, 1, 2) in block order: D_1 = X31+X22+X13 and so on.
std::array<std::array<std::size_t, 2>, 3> diagonal_cells(std::size_t k);

// The odd endomorphisms v and h of H(X) = H(D1)+H(D2)+H(D3).
std::array<GradedMap, 2> bitriangle_endomorphisms(const BitriangleHomology& hx);

// Sign of the block permutation from column-major to row-major cell order.
std::array<int, 2> theta_sign(const Grid<GradedSpace>& dims);

ComparisonReport compare_homology(const BitriangleHomology& hx);

template <class E>
std::vector<typename E::Homology> cell_homology(const BitriangleT<typename E::Map>& bt, const E& engine) {
  std::vector<typename E::Homology> out;
  out.reserve(9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out.push_back(engine.homology(bt.X[i][j]));
  return out;
}

namespace detail {

template <class M>
bool same_shape(const GradedMapT<M>& m, const ComplexT<M>& a, const ComplexT<M>& b) {
  return m.odd && m.src == a.space && m.tgt == b.space;
}

inline std::string cell(std::size_t i, std::size_t j) {
  return "X" + std::to_string(i + 1) + std::to_string(j + 1);
}

}  // namespace detail

template <class E>
BitriangleReport validate(const BitriangleT<typename E::Map>& bt, const E& engine) {
  using detail::cell;
  BitriangleReport rep;
  auto add = [&](std::string kind, std::size_t i, std::size_t j, bool ok, std::string detail) {
    rep.checks.push_back({std::move(kind), static_cast<int>(i), static_cast<int>(j), ok, std::move(detail)});
  };

  bool shapes = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const auto& x = bt.X[i][j];
      auto shape = [&](const char* name, const auto& m, const auto& a, const auto& b) {
        if (!detail::same_shape(m, a, b)) {
          add("shape", i + 1, j + 1, false, std::string(name) + " at " + cell(i, j) + " has the wrong shape or parity");
          shapes = false;
        }
      };
      shape("v", bt.v[i][j], x, bt.X[cyc(i, 1)][j]);
      shape("h", bt.h[i][j], x, bt.X[i][cyc(j, 1)]);
      shape("s", bt.s[i][j], x, bt.X[cyc(i, 1)][cyc(j, 1)]);
      shape("t", bt.t[i][j], bt.X[cyc(i, 1)][j], x);
      shape("r", bt.r[i][j], bt.X[i][cyc(j, 1)], x);
    }
  if (!shapes) return rep;

  for (std::size_t k = 0; k < 3; ++k) {
    auto c = verify_homotopy_exact(bt.column(k), engine);
    add("column", 0, k + 1, c.ok(), c.ok() ? "" : c.summary());
    auto r = verify_homotopy_exact(bt.row(k), engine);
    add("row", k + 1, 0, r.ok(), r.ok() ? "" : r.summary());
  }

  // d s + s d = h v + v h on each square
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t i1 = cyc(i, 1), j1 = cyc(j, 1);
      const auto& s = bt.s[i][j];
      auto lhs = compose(bt.X[i1][j1].d, s) + compose(s, bt.X[i][j].d);
      auto rhs = compose(bt.h[i1][j], bt.v[i][j]) + compose(bt.v[i][j1], bt.h[i][j]);
      bool ok = lhs == rhs;
      add("square", i + 1, j + 1, ok, ok ? "" : "d s + s d != h v + v h from " + cell(i, j));
    }

  auto H = cell_homology(bt, engine);
  auto hom = [&](std::size_t i, std::size_t j) -> const typename E::Homology& { return H[3 * i + j]; };
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t ip = cyc(i, -1), in = cyc(i, 1), jp = cyc(j, -1), jn = cyc(j, 1);
      // vs + sv + th + ht : X[i][j] -> X[i-1][j+1]
      auto a = compose(bt.v[in][jn], bt.s[i][j]) + compose(bt.s[in][j], bt.v[i][j]) +
               compose(bt.t[ip][jn], bt.h[i][j]) + compose(bt.h[ip][j], bt.t[ip][j]);
      if (!is_chain_map(a, bt.X[i][j], bt.X[ip][jn]))
        add("vertical-diagonal", i + 1, j + 1, false, "vs + sv + th + ht is not a chain map on " + cell(i, j));
      else if (!induced_on_homology(a, hom(i, j), hom(ip, jn)).is_zero())
        add("vertical-diagonal", i + 1, j + 1, false, "vs + sv + th + ht is nonzero on H(" + cell(i, j) + ")");
      else
        add("vertical-diagonal", i + 1, j + 1, true, "");
      // hs + sh + rv + vr : X[i][j] -> X[i+1][j-1]
      auto b = compose(bt.h[in][jn], bt.s[i][j]) + compose(bt.s[i][jn], bt.h[i][j]) +
               compose(bt.r[in][jp], bt.v[i][j]) + compose(bt.v[i][jp], bt.r[i][jp]);
      if (!is_chain_map(b, bt.X[i][j], bt.X[in][jp]))
        add("horizontal-diagonal", i + 1, j + 1, false, "hs + sh + rv + vr is not a chain map on " + cell(i, j));
      else if (!induced_on_homology(b, hom(i, j), hom(in, jp)).is_zero())
        add("horizontal-diagonal", i + 1, j + 1, false, "hs + sh + rv + vr is nonzero on H(" + cell(i, j) + ")");
      else
        add("horizontal-diagonal", i + 1, j + 1, true, "");
    }
  return rep;
}

template <class E>
BitriangleHomology bitriangle_homology(const BitriangleT<typename E::Map>& bt, const E& engine) {
  auto H = cell_homology(bt, engine);
  BitriangleHomology out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      out.dims[i][j] = H[3 * i + j].dims();
      out.v[i][j] = induced_on_homology(bt.v[i][j], H[3 * i + j], H[3 * cyc(i, 1) + j]);
      out.h[i][j] = induced_on_homology(bt.h[i][j], H[3 * i + j], H[3 * i + cyc(j, 1)]);
    }
  return out;
}

// Requires validate to pass (not rechecked).
template <class E>
ComparisonReport compare(const BitriangleT<typename E::Map>& bt, const E& engine) {
  return compare_homology(bitriangle_homology(bt, engine));
}

namespace detail {

// A grid cell: the Koszul complex of a tuple, possibly shifted, or zero.
template <class M>
struct KCell {
  std::optional<OperatorTupleT<M>> tuple;
  bool shifted = false;

  std::size_t n() const { return tuple->size(); }
  KoszulLayout layout() const { return KoszulLayout(n(), tuple->dim, shifted); }
  ComplexT<M> complex(FieldSpec f) const {
    if (!tuple) return ComplexT<M>::zero({0, 0}, f);
    auto k = koszul_complex(*tuple);
    return shifted ? shift(k) : k;
  }
  GradedSpace space() const { return tuple ? layout().space() : GradedSpace{}; }
};

template <class M>
KCell<M> kc(const OperatorTupleT<M>& a, bool shifted = false) {
  return {a, shifted};
}

template <class M>
struct GridBuilder {
  FieldSpec f;
  std::size_t dim;
  Grid<KCell<M>> cells;

  Matrix lam(ExteriorOp k, std::size_t j, std::size_t n) const { return exterior_operator(k, j, n, f); }
  Matrix one(std::size_t n) const { return Matrix::identity(std::size_t{1} << n, f); }
  M id() const { return M::identity(dim, f); }

  // Odd map between cells given in natural coordinates.
  GradedMapT<M> map(const KCell<M>& a, const KCell<M>& b, const std::optional<M>& natural) const {
    if (!a.tuple || !b.tuple || !natural) return GradedMapT<M>::zero(a.space(), b.space(), true, f);
    return graded_from_natural(*natural, a.layout(), b.layout(), true);
  }
  GradedMapT<M> zero(const KCell<M>& a, const KCell<M>& b) const { return map(a, b, std::nullopt); }

  BitriangleT<M> finish(const Grid<std::optional<M>>& v, const Grid<std::optional<M>>& h,
                        const Grid<std::optional<M>>& s, const Grid<std::optional<M>>& t,
                        const Grid<std::optional<M>>& r) const {
    BitriangleT<M> bt;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const auto& c = cells[i][j];
        bt.X[i][j] = c.complex(f);
        bt.v[i][j] = map(c, cells[cyc(i, 1)][j], v[i][j]);
        bt.h[i][j] = map(c, cells[i][cyc(j, 1)], h[i][j]);
        bt.s[i][j] = map(c, cells[cyc(i, 1)][cyc(j, 1)], s[i][j]);
        bt.t[i][j] = map(cells[cyc(i, 1)][j], c, t[i][j]);
        bt.r[i][j] = map(cells[i][cyc(j, 1)], c, r[i][j]);
      }
    return bt;
  }
};

template <class M>
void check_product_pair(const OperatorTupleT<M>& a, const OperatorTupleT<M>& b) {
  if (a.size() != b.size() || a.dim != b.dim || !(a.field == b.field))
    throw std::invalid_argument("tuples have different shapes");
  if (a.size() < 1) throw PreconditionError("product needs nonempty tuples");
  for (std::size_t k = 2; k <= a.size(); ++k)
    if (!(a[k] == b[k])) throw PreconditionError("tuples differ outside slot 1 (slot " + std::to_string(k) + ")");
}

}  // namespace detail

// A . B = (A_1 B_1, A_2, ..., A_n); throws NonCommutingError if that fails to commute.
template <class M>
OperatorTupleT<M> product_tuple(const OperatorTupleT<M>& a, const OperatorTupleT<M>& b) {
  detail::check_product_pair(a, b);
  std::vector<M> ops = a.ops;
  ops[0] = a[1] * b[1];
  return make_operator_tuple(a.field, a.dim, std::move(ops));
}

// nu(A_1) = eps_1 eps_1^* + A_1 eps_1^* eps_1 and mu(B_1) = B_1 eps_1 eps_1^* + eps_1^* eps_1
// on E (x) Lambda(F^n), natural coordinates.
template <class M>
M nu_operator(const M& a1, std::size_t n, FieldSpec f) {
  Matrix e = exterior_operator(ExteriorOp::eps, 1, n, f), es = exterior_operator(ExteriorOp::eps_star, 1, n, f);
  return kron(e * es, M::identity(a1.rows(), f)) + kron(es * e, a1);
}

template <class M>
M mu_operator(const M& b1, std::size_t n, FieldSpec f) {
  Matrix e = exterior_operator(ExteriorOp::eps, 1, n, f), es = exterior_operator(ExteriorOp::eps_star, 1, n, f);
  return kron(e * es, b1) + kron(es * e, M::identity(b1.rows(), f));
}

// K(B) -nu(A_1)-> K(A.B)[1] -mu(B_1)-> K(A) -eps_1^*-> K(B) with homotopy
// (eps_1 eps_1^*, eps_1^* eps_1, eps_1).
template <class M>
TriangleT<M> build_M_triangle(const OperatorTupleT<M>& a, const OperatorTupleT<M>& b) {
  auto ab = product_tuple(a, b);
  std::size_t n = a.size();
  FieldSpec f = a.field;
  KoszulLayout l(n, a.dim, false), ls(n, a.dim, true);
  M id = M::identity(a.dim, f);
  Matrix e = exterior_operator(ExteriorOp::eps, 1, n, f), es = exterior_operator(ExteriorOp::eps_star, 1, n, f);
  TriangleT<M> x;
  x.X = {koszul_complex(b), shift(koszul_complex(ab)), koszul_complex(a)};
  x.v = {graded_from_natural(nu_operator(a[1], n, f), l, ls, true),
         graded_from_natural(mu_operator(b[1], n, f), ls, l, true),
         graded_from_natural(kron(es, id), l, l, true)};
  x.t = std::array<GradedMapT<M>, 3>{graded_from_natural(kron(e * es, id), ls, l, true),
                                     graded_from_natural(kron(es * e, id), l, ls, true),
                                     graded_from_natural(kron(e, id), l, l, true)};
  return x;
}

// Rows X^{j(A)}_i, its shift, X^A_i; columns X^{i(A)}_{j-1}, its shift, X^A_j.
// All squares anti-commute on the nose (s = 0). Requires 1 <= i < j <= n.
template <class M>
BitriangleT<M> build_trivial_bt(const OperatorTupleT<M>& a, std::size_t i, std::size_t j) {
  std::size_t n = a.size();
  if (n < 2) throw PreconditionError("triviality bitriangle needs n >= 2");
  if (!(1 <= i && i < j && j <= n)) throw PreconditionError("triviality bitriangle needs 1 <= i < j <= n");
  using detail::kc;
  using Op = std::optional<M>;
  auto ja = remove_entry(a, j), ia = remove_entry(a, i), ija = remove_entry(ja, i);
  detail::GridBuilder<M> g{a.field, a.dim, {}};
  g.cells = {{{kc(ija), kc(ija, true), kc(ja)}, {kc(ija, true), kc(ija), kc(ja, true)}, {kc(ia), kc(ia, true), kc(a)}}};
  M id = g.id();
  auto L = [&](ExteriorOp k, std::size_t p, std::size_t m) { return g.lam(k, p, m); };
  using enum ExteriorOp;
  std::size_t m = n - 1;
  // row homotopy-triangle operators on Lambda(m) and Lambda(n)
  M Ai_s = kron(g.one(m - 1), a[i]), Ai_b = kron(g.one(m), a[i]);
  M io_s = kron(L(iota, i, m), id), io_b = kron(L(iota, i, n), id);
  M ie_s = kron(L(iota_star, i, m) * L(eps_star, i, m), id), ie_b = kron(L(iota_star, i, n) * L(eps_star, i, n), id);
  M is_s = kron(L(iota_star, i, m), id), is_b = kron(L(iota_star, i, n), id);
  M ei_s = kron(L(eps, i, m) * L(iota, i, m), id), ei_b = kron(L(eps, i, n) * L(iota, i, n), id);
  // column operators
  M Aj_s = kron(g.one(m - 1), a[j]), Aj_m = kron(g.one(m), a[j]);
  M jo_s = kron(L(iota, j - 1, m), id), jo_b = kron(L(iota, j, n), id);
  M je_s = kron(L(iota_star, j - 1, m) * L(eps_star, j - 1, m), id),
    je_b = kron(L(iota_star, j, n) * L(eps_star, j, n), id);
  M js_s = kron(L(iota_star, j - 1, m), id), js_b = kron(L(iota_star, j, n), id);
  M ej_s = kron(L(eps, j - 1, m) * L(iota, j - 1, m), id), ej_b = kron(L(eps, j, n) * L(iota, j, n), id);

  Grid<Op> v{{{Aj_s, -Aj_s, Aj_m}, {jo_s, -jo_s, jo_b}, {je_s, -je_s, je_b}}};
  Grid<Op> h{{{Ai_s, io_s, ie_s}, {Ai_s, io_s, -ie_s}, {Ai_b, io_b, ie_b}}};
  Grid<Op> t{{{Op{}, Op{}, Op{}}, {js_s, -js_s, js_b}, {ej_s, -ej_s, ej_b}}};
  Grid<Op> r{{{Op{}, is_s, ei_s}, {Op{}, is_s, -ei_s}, {Op{}, is_b, ei_b}}};
  Grid<Op> s{};
  return g.finish(v, h, s, t, r);
}

// Rows X^{B}_m, shifted X^{A.B}_m with the last map negated, X^A_m; columns
// M(m(A), m(B)), its negative on the shifts, M(A, B). Requires 2 <= m <= n.
template <class M>
BitriangleT<M> build_Xm(const OperatorTupleT<M>& a, const OperatorTupleT<M>& b, std::size_t m) {
  auto ab = product_tuple(a, b);
  std::size_t n = a.size();
  if (m < 2 || m > n) throw PreconditionError("X(m) needs 2 <= m <= n");
  using detail::kc;
  using Op = std::optional<M>;
  using enum ExteriorOp;
  FieldSpec f = a.field;
  auto ma = remove_entry(a, m), mb = remove_entry(b, m), mab = remove_entry(ab, m);
  detail::GridBuilder<M> g{f, a.dim, {}};
  g.cells = {{{kc(mb), kc(mb, true), kc(b)}, {kc(mab, true), kc(mab), kc(ab, true)}, {kc(ma), kc(ma, true), kc(a)}}};
  M id = g.id();
  std::size_t k = n - 1;
  M Am = kron(g.one(k), a[m]);
  M io = kron(g.lam(iota, m, n), id), ie = kron(g.lam(iota_star, m, n) * g.lam(eps_star, m, n), id);
  M is = kron(g.lam(iota_star, m, n), id), ei = kron(g.lam(eps, m, n) * g.lam(iota, m, n), id);
  auto ops = [&](std::size_t p) {
    Matrix e = g.lam(eps, 1, p), es = g.lam(eps_star, 1, p);
    return std::array<M, 6>{nu_operator(a[1], p, f), mu_operator(b[1], p, f), kron(es, id),
                            kron(e * es, id),        kron(es * e, id),        kron(e, id)};
  };
  auto sm = ops(k), bg = ops(n);
  Grid<Op> v{{{sm[0], -sm[0], bg[0]}, {sm[1], -sm[1], bg[1]}, {sm[2], -sm[2], bg[2]}}};
  Grid<Op> t{{{sm[3], -sm[3], bg[3]}, {sm[4], -sm[4], bg[4]}, {sm[5], -sm[5], bg[5]}}};
  Grid<Op> h{{{Am, io, ie}, {Am, io, -ie}, {Am, io, ie}}};
  Grid<Op> r{{{Op{}, is, ei}, {Op{}, is, -ei}, {Op{}, is, ei}}};
  Grid<Op> s{};
  return g.finish(v, h, s, t, r);
}

// Rows X^B_1, shifted X^{A.B}_1 with the last map negated, 0 -> K(A)[1] -1-> K(A);
// the square at X21 commutes up to s = eps_1 iota_1 B_1.
template <class M>
BitriangleT<M> build_X1(const OperatorTupleT<M>& a, const OperatorTupleT<M>& b) {
  auto ab = product_tuple(a, b);
  std::size_t n = a.size();
  using detail::kc;
  using Op = std::optional<M>;
  using enum ExteriorOp;
  FieldSpec f = a.field;
  auto q = remove_entry(a, 1);
  detail::GridBuilder<M> g{f, a.dim, {}};
  detail::KCell<M> none{};
  g.cells = {{{kc(q), kc(q, true), kc(b)}, {kc(q, true), kc(q), kc(ab, true)}, {none, kc(a, true), kc(a)}}};
  M id = g.id();
  std::size_t k = n - 1;
  M io = kron(g.lam(iota, 1, n), id), ie = kron(g.lam(iota_star, 1, n) * g.lam(eps_star, 1, n), id);
  M is = kron(g.lam(iota_star, 1, n), id), ei = kron(g.lam(eps, 1, n) * g.lam(iota, 1, n), id);
  Matrix e = g.lam(eps, 1, n), es = g.lam(eps_star, 1, n);
  M one_k = kron(g.one(k), id), one_n = kron(g.one(n), id);
  Grid<Op> v{{{one_k, -kron(g.one(k), a[1]), nu_operator(a[1], n, f)},
              {Op{}, -io, mu_operator(b[1], n, f)},
              {Op{}, -ie, kron(es, id)}}};
  Grid<Op> t{{{one_k, Op{}, kron(e * es, id)}, {Op{}, -is, kron(es * e, id)}, {Op{}, -ei, kron(e, id)}}};
  Grid<Op> h{{{kron(g.one(k), b[1]), io, ie}, {kron(g.one(k), ab[1]), io, -ie}, {Op{}, one_n, Op{}}}};
  Grid<Op> r{{{Op{}, is, ei}, {Op{}, is, -ei}, {Op{}, one_n, Op{}}}};
  Grid<Op> s{};
  s[1][0] = kron(g.lam(eps, 1, n) * g.lam(iota, 1, n), b[1]);
  return g.finish(v, h, s, t, r);
}

}  // namespace jt
