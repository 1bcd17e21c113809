#include "jt/pid.hpp"

#include <string>
#include <utility>

#include "jt/errors.hpp"

namespace jt {

namespace {

// Elimination state with U * M * V = A maintained throughout.
struct SnfState {
  PolyMatrix A, U, Uinv, V, Vinv;

  explicit SnfState(const PolyMatrix& m)
      : A(m),
        U(PolyMatrix::identity(m.rows(), m.field())),
        Uinv(U),
        V(PolyMatrix::identity(m.cols(), m.field())),
        Vinv(V) {}

  // row a += q * row b
  void row_add(std::size_t a, std::size_t b, const Poly& q) {
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!A.at(b, j).is_zero()) A.at(a, j) += q * A.at(b, j);
    for (std::size_t j = 0; j < U.cols(); ++j)
      if (!U.at(b, j).is_zero()) U.at(a, j) += q * U.at(b, j);
    for (std::size_t i = 0; i < Uinv.rows(); ++i)
      if (!Uinv.at(i, a).is_zero()) Uinv.at(i, b) -= q * Uinv.at(i, a);
  }
  // col a += q * col b
  void col_add(std::size_t a, std::size_t b, const Poly& q) {
    for (std::size_t i = 0; i < A.rows(); ++i)
      if (!A.at(i, b).is_zero()) A.at(i, a) += q * A.at(i, b);
    for (std::size_t i = 0; i < V.rows(); ++i)
      if (!V.at(i, b).is_zero()) V.at(i, a) += q * V.at(i, b);
    for (std::size_t j = 0; j < Vinv.cols(); ++j)
      if (!Vinv.at(a, j).is_zero()) Vinv.at(b, j) -= q * Vinv.at(a, j);
  }
  void row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A.at(a, j), A.at(b, j));
    for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
    for (std::size_t i = 0; i < Uinv.rows(); ++i) std::swap(Uinv.at(i, a), Uinv.at(i, b));
  }
  void col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < A.rows(); ++i) std::swap(A.at(i, a), A.at(i, b));
    for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
    for (std::size_t j = 0; j < Vinv.cols(); ++j) std::swap(Vinv.at(a, j), Vinv.at(b, j));
  }
  // Monic normalisation by columns: U(-M) = U(M).
  void col_scale(std::size_t a, const Scalar& c) {
    Scalar ci = c.inverse();
    for (std::size_t i = 0; i < A.rows(); ++i) A.at(i, a) = A.at(i, a).scaled(c);
    for (std::size_t i = 0; i < V.rows(); ++i) V.at(i, a) = V.at(i, a).scaled(c);
    for (std::size_t j = 0; j < Vinv.cols(); ++j) Vinv.at(a, j) = Vinv.at(a, j).scaled(ci);
  }

  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    for (std::size_t i = t; i < A.rows(); ++i)
      for (std::size_t j = t; j < A.cols(); ++j) {
        const Poly& e = A.at(i, j);
        if (e.is_zero()) continue;
        if (!found || e.degree() < A.at(pi, pj).degree()) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    return found;
  }

  // One elimination pass on the pivot at (t, t); false once row and column t
  // are clear and the pivot divides the remaining block.
  bool step(std::size_t t) {
    for (std::size_t i = t + 1; i < A.rows(); ++i) {
      if (A.at(i, t).is_zero()) continue;
      row_add(i, t, -(A.at(i, t) / A.at(t, t)));
      if (!A.at(i, t).is_zero()) {
        row_swap(i, t);
        return true;
      }
    }
    for (std::size_t j = t + 1; j < A.cols(); ++j) {
      if (A.at(t, j).is_zero()) continue;
      col_add(j, t, -(A.at(t, j) / A.at(t, t)));
      if (!A.at(t, j).is_zero()) {
        col_swap(j, t);
        return true;
      }
    }
    for (std::size_t i = t + 1; i < A.rows(); ++i)
      for (std::size_t j = t + 1; j < A.cols(); ++j)
        if (!(A.at(i, j) % A.at(t, t)).is_zero()) {
          row_add(t, i, Poly::constant(A.field(), 1));
          return true;
        }
    return false;
  }
};

}  // namespace

SNFResult snf(const PolyMatrix& m) {
  SnfState s(m);
  std::size_t t = 0;
  for (; t < m.rows() && t < m.cols(); ++t) {
    std::size_t pi = 0, pj = 0;
    if (!s.find_pivot(t, pi, pj)) break;
    s.row_swap(t, pi);
    s.col_swap(t, pj);
    while (s.step(t)) {
    }
    s.col_scale(t, s.A.at(t, t).lead().inverse());
  }
  return {std::move(s.U), std::move(s.Uinv), std::move(s.V), std::move(s.Vinv), std::move(s.A), t};
}

TorsionModuleHomology::TorsionModuleHomology(const PolyComplex& c, std::optional<Scalar> at)
    : complex_(c), at_(std::move(at)) {
  part_[0] = build(Part::plus);
  part_[1] = build(Part::minus);
}

TorsionModuleHomology::PartData TorsionModuleHomology::build(Part p) const {
  FieldSpec f = field();
  const PolyMatrix& d_out = complex_.d.at(p);
  const PolyMatrix& d_in = complex_.d.at(flip(p));
  std::size_t n = complex_.space.dim(p);

  PartData pd;
  SNFResult s1 = snf(d_out);
  std::size_t r = s1.rank, k = n - r;
  pd.kernel_offset = r;
  pd.vinv = s1.Vinv.block(r, 0, k, n);
  PolyMatrix kb = s1.V.block(0, r, n, k);
  SNFResult s2 = snf(pd.vinv * d_in);
  pd.u2 = s2.U;
  PolyMatrix gens = kb * s2.Uinv;

  std::vector<PolyMatrix> cols;
  for (std::size_t t = 0; t < k; ++t) {
    if (t >= s2.rank) {
      ++pd.free_rank;
      continue;
    }
    Poly d = s2.factor(t);
    if (d.degree() == 0) continue;
    Poly g = Poly::constant(f, 1), local = d;
    if (at_) {
      unsigned ord = d.order_at(*at_);
      if (ord == 0) continue;
      local = Poly::linear(*at_).pow(ord);
      Poly rest = d / local;
      g = (rest * inverse_mod(rest, local)) % d;
    }
    pd.slots.push_back(t);
    pd.moduli.push_back(d);
    pd.factors.push_back(local);
    PolyMatrix gen = gens.block(0, t, n, 1).scaled(g);
    for (long s = 0; s < local.degree(); ++s) {
      cols.push_back(gen.scaled(Poly::monomial(Scalar::one(f), static_cast<std::size_t>(s))));
      ++pd.dim;
    }
  }
  pd.reps = PolyMatrix(n, pd.dim, f);
  for (std::size_t c = 0; c < cols.size(); ++c) pd.reps.set_block(0, c, cols[c]);
  return pd;
}

bool TorsionModuleHomology::is_cycle(Part p, const PolyMatrix& vectors) const {
  return (complex_.d.at(p) * vectors).is_zero();
}

Matrix TorsionModuleHomology::reduce(Part p, const PolyMatrix& cycles) const {
  if (!is_cycle(p, cycles)) throw PreconditionError("reduce: vector is not a cycle");
  const PartData& pd = part_[index(p)];
  PolyMatrix w = pd.u2 * (pd.vinv * cycles);
  Matrix out(pd.dim, cycles.cols(), field());
  for (std::size_t c = 0; c < cycles.cols(); ++c) {
    std::size_t row = 0;
    for (std::size_t q = 0; q < pd.slots.size(); ++q) {
      Poly x = (w.at(pd.slots[q], c) % pd.moduli[q]) % pd.factors[q];
      for (long s = 0; s < pd.factors[q].degree(); ++s) out.set(row + s, c, x.coeff(s));
      row += static_cast<std::size_t>(pd.factors[q].degree());
    }
  }
  return out;
}

TorsionModuleHomology PolyEngine::homology(const PolyComplex& c) const {
  TorsionModuleHomology h(c, at);
  if (!h.is_finite())
    throw NotFredholm("homology has free rank (" + std::to_string(h.free_rank(Part::plus)) + ", " +
                      std::to_string(h.free_rank(Part::minus)) + ")");
  return h;
}

Matrix companion(const Poly& d) {
  if (d.degree() < 1 || !d.lead().is_one()) throw std::invalid_argument("companion needs a monic polynomial");
  std::size_t n = static_cast<std::size_t>(d.degree());
  Matrix c(n, n, d.field());
  for (std::size_t i = 0; i + 1 < n; ++i) c.set(i + 1, i, 1L);
  for (std::size_t i = 0; i < n; ++i) c.set(i, n - 1, -d.coeff(i));
  return c;
}

}  // namespace jt
