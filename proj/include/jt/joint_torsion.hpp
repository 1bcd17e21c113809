#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jt/koszul.hpp"
#include "jt/pid.hpp"
#include "jt/torsion.hpp"

namespace jt {

struct FredholmData {
  GradedSpace dims;                                 // H(A)
  std::vector<std::optional<GradedSpace>> removed;  // H(j(A)), empty where not finite
  long index = 0;                                   // dim H_- - dim H_+
};

template <class E>
FredholmData fredholm(const OperatorTupleT<typename E::Map>& a, const E& engine) {
  FredholmData out;
  out.dims = engine.homology(koszul_complex(a)).dims();
  out.index = static_cast<long>(out.dims.minus) - static_cast<long>(out.dims.plus);
  for (std::size_t j = 1; j <= a.size(); ++j) {
    try {
      out.removed.push_back(engine.homology(koszul_complex(remove_entry(a, j))).dims());
    } catch (const NotFredholm&) {
      out.removed.push_back(std::nullopt);
    }
  }
  return out;
}

// T_j(A): torsion of the homology triangle of X^A_j. The H(j(A)) blocks come
// first in both parities with the same bases, so the value is relative to the
// standard bases of H(A) only. Individual values depend on that choice.
template <class E>
TorsionScalar factored_torsion(const OperatorTupleT<typename E::Map>& a, std::size_t j, const E& engine) {
  return homotopy_triangle_torsion(triangle_X(a, j), engine);
}

struct JointTorsionResult {
  Scalar tau;
  TorsionScalar T_i, T_j;
  std::size_t i = 0, j = 0;
  std::size_t mu_i = 0, mu_j = 0;  // dim H_+(kA) * dim H_-(kA)
  GradedSpace dims_A, dims_iA, dims_jA;
};

// tau_{i,j}(A) = (-1)^{mu_i + mu_j} T_i(A) / T_j(A).
template <class E>
JointTorsionResult joint_tau(const OperatorTupleT<typename E::Map>& a, std::size_t i, std::size_t j,
                             const E& engine) {
  if (i == j) throw PreconditionError("joint torsion needs i != j");
  if (i < 1 || j < 1 || i > a.size() || j > a.size()) throw PreconditionError("joint torsion index out of range");
  JointTorsionResult r{Scalar::one(a.field), factored_torsion(a, i, engine), factored_torsion(a, j, engine), i, j,
                       0, 0, {}, {}, {}};
  r.dims_A = engine.homology(koszul_complex(a)).dims();
  r.dims_iA = engine.homology(koszul_complex(remove_entry(a, i))).dims();
  r.dims_jA = engine.homology(koszul_complex(remove_entry(a, j))).dims();
  r.mu_i = r.dims_iA.plus * r.dims_iA.minus;
  r.mu_j = r.dims_jA.plus * r.dims_jA.minus;
  r.tau = r.T_i.value / r.T_j.value;
  if ((r.mu_i + r.mu_j) % 2) r.tau = -r.tau;
  return r;
}

// det of the restriction of A_k (as an even chain map of K(k(A))) per parity.
template <class E>
std::array<Scalar, 2> restricted_determinants(const OperatorTupleT<typename E::Map>& a, std::size_t k,
                                              const E& engine) {
  using M = typename E::Map;
  auto ka = remove_entry(a, k);
  auto c = koszul_complex(ka);
  auto h = engine.homology(c);
  KoszulLayout l(ka.size(), a.dim, false);
  Matrix one = Matrix::identity(ExteriorBasis(ka.size()).size(), a.field);
  GradedMapT<M> ak = graded_from_natural(kron(one, a[k]), l, l, false);
  GradedMap ind = induced_on_homology(ak, h, h);
  return {determinant(ind.plus()), determinant(ind.minus())};
}

// Multiplicative Lefschetz number, valid when H(A) = 0:
// (det A_i on H_+(iA) / det on H_-(iA)) * (det A_j on H_-(jA) / det on H_+(jA)).
template <class E>
Scalar lefschetz_tau(const OperatorTupleT<typename E::Map>& a, std::size_t i, std::size_t j, const E& engine) {
  if (i == j) throw PreconditionError("lefschetz_tau needs i != j");
  if (!engine.homology(koszul_complex(a)).is_zero()) throw PreconditionError("lefschetz_tau needs H(A) = 0");
  auto di = restricted_determinants(a, i, engine);
  auto dj = restricted_determinants(a, j, engine);
  for (const auto& d : {di[0], di[1], dj[0], dj[1]})
    if (d.is_zero()) throw PreconditionError("restricted operator is not invertible on homology");
  return di[0] / di[1] * dj[1] / dj[0];
}

JointTorsionResult joint_tau(const MatrixTuple& a, std::size_t i, std::size_t j);
Scalar carey_pincus(const Matrix& a, const Matrix& b);

JointTorsionResult pid_joint_tau(const std::vector<Poly>& polys, std::size_t i, std::size_t j);
Scalar pid_carey_pincus(const Poly& f, const Poly& g);
// The pipeline with every invariant factor replaced by its (z - lam)-primary part.
JointTorsionResult local_joint_tau(const std::vector<Poly>& polys, std::size_t i, std::size_t j, const Scalar& lam);

// Product over all roots lam of f and g of (-1)^{m_f m_g} f~(lam)^{m_g} / g~(lam)^{m_f},
// with f = (z - lam)^{m_f} f~. Throws PreconditionError on a common root.
Scalar tame_symbol(const FactoredPoly& f, const FactoredPoly& g);

struct PolydiscResult {
  Scalar tau;      // pipeline value
  Scalar value;    // f(alpha)
  Poly line;       // f along the k-th coordinate line through alpha, recentred at 0
  JointTorsionResult local;
};

// tau_{1,j} of (f, z_1 - a_1, ..., z_n - a_n) at alpha, 2 <= j <= n + 1. The
// coordinates other than z_{j-1} are substituted by their values (a regular
// sequence), leaving the local instance (f(alpha + z e_{j-1}), z) at 0.
PolydiscResult polydisc_tau(const MultiPoly& f, const std::vector<Scalar>& alpha, std::size_t j);

}  // namespace jt
