#include "jt/joint_torsion.hpp"

#include <string>

namespace jt {

JointTorsionResult joint_tau(const MatrixTuple& a, std::size_t i, std::size_t j) {
  return joint_tau(a, i, j, FiniteEngine{});
}

Scalar carey_pincus(const Matrix& a, const Matrix& b) {
  return joint_tau(make_operator_tuple(a.field(), a.rows(), std::vector<Matrix>{a, b}), 1, 2).tau;
}

JointTorsionResult pid_joint_tau(const std::vector<Poly>& polys, std::size_t i, std::size_t j) {
  return joint_tau(poly_tuple(polys), i, j, PolyEngine{});
}

Scalar pid_carey_pincus(const Poly& f, const Poly& g) { return pid_joint_tau({f, g}, 1, 2).tau; }

JointTorsionResult local_joint_tau(const std::vector<Poly>& polys, std::size_t i, std::size_t j, const Scalar& lam) {
  return joint_tau(poly_tuple(polys), i, j, PolyEngine{lam});
}

Scalar tame_symbol(const FactoredPoly& f0, const FactoredPoly& g0) {
  FactoredPoly f = f0.normalized(), g = g0.normalized();
  if (f.lead.is_zero() || g.lead.is_zero()) throw PreconditionError("tame symbol of the zero polynomial");
  Poly fp = f.expand(), gp = g.expand();
  Scalar acc = Scalar::one(f.field());
  for (const auto& [r, m] : f.roots) {
    for (const auto& [s, k] : g.roots)
      if (r == s) throw PreconditionError("tame symbol: common root " + r.to_string());
    acc /= gp.eval(r).pow(static_cast<long>(m));
  }
  for (const auto& [r, m] : g.roots) acc *= fp.eval(r).pow(static_cast<long>(m));
  return acc;
}

PolydiscResult polydisc_tau(const MultiPoly& f, const std::vector<Scalar>& alpha, std::size_t j) {
  std::size_t n = f.nvars();
  if (alpha.size() != n) throw std::invalid_argument("point has the wrong dimension");
  if (j < 2 || j > n + 1) throw PreconditionError("polydisc_tau needs 2 <= j <= n + 1");
  Scalar value = f.eval(alpha);
  if (value.is_zero()) throw PreconditionError("f(alpha) = 0: the tuple is not invertible at alpha");
  FieldSpec fs = f.field();
  Poly line = f.restrict_line(alpha, j - 2);
  Scalar zero = Scalar::zero(fs);
  auto local = local_joint_tau({line, Poly::z(fs)}, 1, 2, zero);
  if (local.dims_jA.total() != 0)
    throw std::logic_error("local homology of a unit does not vanish");
  return {local.tau, value, line, local};
}

}  // namespace jt
