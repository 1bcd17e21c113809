#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "jt/graded.hpp"

namespace jt {

// A nonzero scalar relative to the standard bases of the graded space it was
// computed on. Only ratios of torsions over the same spaces are basis free.
struct TorsionScalar {
  Scalar value;
  GradedSpace space;
};

// Ker(a_+) = Im(a_-) and Ker(a_-) = Im(a_+), decided by rank identities.
bool is_exact_endo(const GradedMap& a);

// det(a_+ + g) for the standard generalized inverse g of a_-.
TorsionScalar torsion_scalar(const GradedMap& a);
// Same with a caller-supplied generalized inverse of a_- (checked).
TorsionScalar torsion_scalar(const GradedMap& a, const Matrix& ginv_minus);

// The odd endomorphism of V1+V2+V3 with block-cyclic matrices built from
// v[k] : V^{k+1} -> V^{k+2} (indices mod 3), blocks in the order V1, V2, V3.
GradedMap assemble_triangle(const std::array<GradedMap, 3>& v);
TorsionScalar triangle_torsion(const std::array<GradedMap, 3>& v);

// Exactness of the six-term sequence of an odd triangle of vector spaces,
// node by node: the composite through the node vanishes and
// rank(incoming) + rank(outgoing) = dim(node).
struct SixTermNode {
  int space;  // 1..3
  Part part;
  std::size_t dim, rank_in, rank_out;
  bool composite_zero;
  bool exact() const { return composite_zero && rank_in + rank_out == dim; }
};
std::vector<SixTermNode> six_term_nodes(const std::array<GradedMap, 3>& v);
bool six_term_exact(const std::array<GradedMap, 3>& v);

// T(v)/T(h) for anti-commuting exact odd endomorphisms of one space.
Scalar comparison_number(const GradedMap& v, const GradedMap& h);

struct QuotientComparisonData {
  std::array<Matrix, 2> ker_v, ker_h, ker_vh, image_vh;  // per parity, columns
  std::array<Matrix, 2> xi, eta;  // induced maps Q_s -> R_{1-s}
  Scalar det_plus, det_minus;     // det(eta_+^{-1} xi_+), det(eta_- xi_-^{-1})
};
QuotientComparisonData quotient_comparison_data(const GradedMap& v, const GradedMap& h);
Scalar comparison_via_quotients(const GradedMap& v, const GradedMap& h);

void check_anticommuting_exact_pair(const GradedMap& v, const GradedMap& h);

// An odd triangle of complexes X1 -v1-> X2 -v2-> X3 -v3-> X1 with optional
// homotopy maps t[k] : X_{k+2} -> X_{k+1} (0-based: t[k] goes from X[k+1] to X[k]).
template <class M>
struct TriangleT {
  std::array<ComplexT<M>, 3> X;
  std::array<GradedMapT<M>, 3> v;
  std::optional<std::array<GradedMapT<M>, 3>> t;
};
using TriangleOfComplexes = TriangleT<Matrix>;

struct FiniteEngine {
  using Map = Matrix;
  using Homology = HomologyData;
  HomologyData homology(const Complex2& c) const { return HomologyData(c); }
};

struct HomotopyFailure {
  int condition;  // 0: shape/chain map, 1: chain-level homotopy, 2: homology decomposition
  int index;      // 1-based triangle position
  std::string detail;
};

struct HomotopyReport {
  std::vector<HomotopyFailure> failures;
  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

template <class E>
struct TriangleHomology {
  std::array<typename E::Homology, 3> H;
  std::array<GradedMap, 3> v;
};

template <class E>
TriangleHomology<E> triangle_homology(const TriangleT<typename E::Map>& X, const E& engine) {
  std::array<typename E::Homology, 3> H{engine.homology(X.X[0]), engine.homology(X.X[1]),
                                        engine.homology(X.X[2])};
  std::array<GradedMap, 3> v{induced_on_homology(X.v[0], H[0], H[1]), induced_on_homology(X.v[1], H[1], H[2]),
                             induced_on_homology(X.v[2], H[2], H[0])};
  return {std::move(H), std::move(v)};
}

template <class E>
HomotopyReport verify_homotopy_exact(const TriangleT<typename E::Map>& X, const E& engine) {
  using M = typename E::Map;
  HomotopyReport rep;
  auto fail = [&](int c, int i, std::string d) { rep.failures.push_back({c, i + 1, std::move(d)}); };
  if (!X.t) {
    fail(0, -1, "no homotopy supplied");
    return rep;
  }
  const auto& t = *X.t;
  bool shapes_ok = true;
  for (int i = 0; i < 3; ++i) {
    const auto& a = X.X[i];
    const auto& b = X.X[(i + 1) % 3];
    if (!X.v[i].odd || !(X.v[i].src == a.space) || !(X.v[i].tgt == b.space)) {
      fail(0, i, "v has the wrong shape or parity");
      shapes_ok = false;
    } else if (!check_odd_chain_map(X.v[i], a, b)) {
      fail(0, i, "v is not an odd chain map");
    }
    if (!t[i].odd || !(t[i].src == b.space) || !(t[i].tgt == a.space)) {
      fail(0, i, "t has the wrong shape or parity");
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return rep;
  for (int i = 0; i < 3; ++i) {
    int prev = (i + 2) % 3, next = (i + 1) % 3;
    const GradedMapT<M>& tp = t[prev];  // X_i -> X_{i-1}
    auto lhs = compose(X.X[prev].d, tp) + compose(tp, X.X[i].d);
    auto rhs = compose(X.v[next], X.v[i]);
    if (!(lhs == rhs)) fail(1, i, "d t + t d != v v");
  }
  std::array<typename E::Homology, 3> H{engine.homology(X.X[0]), engine.homology(X.X[1]),
                                        engine.homology(X.X[2])};
  for (int i = 0; i < 3; ++i) {
    int prev = (i + 2) % 3;
    auto e = compose(X.v[prev], t[prev]) + compose(t[i], X.v[i]);
    if (!is_chain_map(e, X.X[i], X.X[i])) {
      fail(2, i, "v t + t v is not a chain map");
      continue;
    }
    GradedMap ind = induced_on_homology(e, H[i], H[i]);
    if (!ind.part[0].is_identity() || !ind.part[1].is_identity())
      fail(2, i, "v t + t v does not induce the identity on homology");
  }
  return rep;
}

template <class E>
TorsionScalar homotopy_triangle_torsion(const TriangleT<typename E::Map>& X, const E& engine) {
  auto rep = verify_homotopy_exact(X, engine);
  if (!rep.ok()) throw PreconditionError("triangle is not homotopy exact: " + rep.summary());
  return triangle_torsion(triangle_homology(X, engine).v);
}

}  // namespace jt
