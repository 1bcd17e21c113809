#include "jt/torsion.hpp"

#include <sstream>

namespace jt {

namespace {

void require_odd_endo(const GradedMap& a, const char* who) {
  if (!a.odd || !(a.src == a.tgt)) throw std::invalid_argument(std::string(who) + ": expected an odd endomorphism");
}

}  // namespace

bool is_exact_endo(const GradedMap& a) {
  require_odd_endo(a, "is_exact_endo");
  for (Part s : kParts) {
    if (!(a.at(flip(s)) * a.at(s)).is_zero()) return false;
    if (rank(a.at(s)) + rank(a.at(flip(s))) != a.src.dim(s)) return false;
  }
  return true;
}

TorsionScalar torsion_scalar(const GradedMap& a) { return torsion_scalar(a, generalized_inverse(a.minus())); }

TorsionScalar torsion_scalar(const GradedMap& a, const Matrix& g) {
  require_odd_endo(a, "torsion_scalar");
  if (a.src.plus != a.src.minus) throw PreconditionError("torsion_scalar: dim V+ != dim V-");
  if (!is_exact_endo(a)) throw PreconditionError("torsion_scalar: endomorphism is not exact");
  const Matrix& am = a.minus();
  if (g.rows() != am.cols() || g.cols() != am.rows() || !(am * g * am == am) || !(g * am * g == g))
    throw std::invalid_argument("torsion_scalar: not a pseudo-inverse of a_-");
  Scalar d = determinant(a.plus() + g);
  if (d.is_zero()) throw std::logic_error("torsion_scalar: singular despite exactness");
  return {d, a.src};
}

GradedMap assemble_triangle(const std::array<GradedMap, 3>& v) {
  FieldSpec f = v[0].field();
  for (int k = 0; k < 3; ++k) {
    if (!v[k].odd) throw std::invalid_argument("triangle maps must be odd");
    if (!(v[k].tgt == v[(k + 1) % 3].src)) throw std::invalid_argument("triangle maps do not chain");
  }
  std::array<GradedSpace, 3> sp{v[0].src, v[1].src, v[2].src};
  GradedSpace total = sp[0] + sp[1] + sp[2];
  GradedMap out = GradedMap::zero(total, total, true, f);
  for (Part s : kParts) {
    Part t = flip(s);
    std::array<std::size_t, 3> src_off{0, sp[0].dim(s), sp[0].dim(s) + sp[1].dim(s)};
    std::array<std::size_t, 3> tgt_off{0, sp[0].dim(t), sp[0].dim(t) + sp[1].dim(t)};
    for (int k = 0; k < 3; ++k) out.part[index(s)].set_block(tgt_off[(k + 1) % 3], src_off[k], v[k].at(s));
  }
  return out;
}

TorsionScalar triangle_torsion(const std::array<GradedMap, 3>& v) {
  GradedMap a = assemble_triangle(v);
  if (!is_exact_endo(a)) throw PreconditionError("triangle_torsion: triangle is not exact");
  return torsion_scalar(a);
}

std::vector<SixTermNode> six_term_nodes(const std::array<GradedMap, 3>& v) {
  std::vector<SixTermNode> nodes;
  // Node V^{k+1}_{t}: incoming v[k] from V^k_{flip t}, outgoing v[k+1] on the t part.
  for (Part s : kParts) {
    for (int k = 0; k < 3; ++k) {
      const GradedMap& in = v[k];
      const GradedMap& out = v[(k + 1) % 3];
      Part node_part = flip(s);
      const Matrix& a = in.at(s);
      const Matrix& b = out.at(node_part);
      SixTermNode n{(k + 1) % 3 + 1, node_part, out.src.dim(node_part), rank(a), rank(b), (b * a).is_zero()};
      nodes.push_back(n);
    }
  }
  return nodes;
}

bool six_term_exact(const std::array<GradedMap, 3>& v) {
  for (const auto& n : six_term_nodes(v))
    if (!n.exact()) return false;
  return true;
}

void check_anticommuting_exact_pair(const GradedMap& v, const GradedMap& h) {
  require_odd_endo(v, "comparison");
  require_odd_endo(h, "comparison");
  if (!(v.src == h.src)) throw std::invalid_argument("comparison: maps act on different spaces");
  if (!is_exact_endo(v) || !is_exact_endo(h)) throw PreconditionError("comparison: endomorphism is not exact");
  if (!(compose(v, h) + compose(h, v)).is_zero()) throw PreconditionError("comparison: v and h do not anti-commute");
}

Scalar comparison_number(const GradedMap& v, const GradedMap& h) {
  check_anticommuting_exact_pair(v, h);
  return torsion_scalar(v).value / torsion_scalar(h).value;
}

QuotientComparisonData quotient_comparison_data(const GradedMap& v, const GradedMap& h) {
  check_anticommuting_exact_pair(v, h);
  QuotientComparisonData q;
  GradedMap vh = compose(v, h);
  std::array<QuotientSpace, 2> Q, R;
  for (Part s : kParts) {
    std::size_t i = index(s);
    q.ker_v[i] = kernel_basis(v.at(s));
    q.ker_h[i] = kernel_basis(h.at(s));
    q.ker_vh[i] = kernel_basis(vh.at(s));
    q.image_vh[i] = image_basis(vh.at(s));
    Q[i] = QuotientSpace(span_sum(q.ker_v[i], q.ker_h[i]), q.ker_vh[i]);
    R[i] = QuotientSpace(q.image_vh[i], span_intersection(q.ker_v[i], q.ker_h[i]));
  }
  for (Part s : kParts) {
    std::size_t i = index(s), j = index(flip(s));
    q.xi[i] = R[j].coordinates(v.at(s) * Q[i].representatives());
    q.eta[i] = R[j].coordinates(h.at(s) * Q[i].representatives());
    if (q.xi[i].rows() != q.xi[i].cols()) throw PreconditionError("comparison_via_quotients: quotient dimensions differ");
  }
  Scalar dxp = determinant(q.xi[0]), dep = determinant(q.eta[0]);
  Scalar dxm = determinant(q.xi[1]), dem = determinant(q.eta[1]);
  if (dxp.is_zero() || dep.is_zero() || dxm.is_zero() || dem.is_zero())
    throw PreconditionError("comparison_via_quotients: induced map is not invertible");
  q.det_plus = dxp / dep;
  q.det_minus = dem / dxm;
  return q;
}

Scalar comparison_via_quotients(const GradedMap& v, const GradedMap& h) {
  auto q = quotient_comparison_data(v, h);
  return q.det_plus * q.det_minus;
}

std::string HomotopyReport::summary() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < failures.size(); ++k) {
    const auto& f = failures[k];
    os << (k ? "; " : "") << "condition " << f.condition << " at " << f.index << ": " << f.detail;
  }
  return os.str();
}

}  // namespace jt
