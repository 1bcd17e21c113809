#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "jt/graded.hpp"
#include "jt/poly.hpp"

namespace jt {

// U * M * V = D with U, V unimodular (inverses kept) and D diagonal with monic
// invariant factors d_1 | d_2 | ... followed by zeros.
struct SNFResult {
  PolyMatrix U, Uinv, V, Vinv, D;
  std::size_t rank = 0;

  Poly factor(std::size_t t) const { return D.at(t, t); }
};

// Pivot of minimal degree, ties broken row-major; deterministic.
SNFResult snf(const PolyMatrix& m);

using PolyMap = GradedMapT<PolyMatrix>;
using PolyComplex = ComplexT<PolyMatrix>;

// Homology of a complex of free F[z]-modules, as a finitely generated torsion
// module plus a free rank. The F-basis of the torsion part is
// {g_t * z^s : 0 <= s < deg d_t}, one generator g_t per non-unit invariant
// factor. With a localization point lam, every factor d_t is replaced by its
// (z - lam)-primary part (z - lam)^k and g_t by e_t g_t, e_t the idempotent
// of F[z]/(d_t) projecting onto that part.
class TorsionModuleHomology {
 public:
  explicit TorsionModuleHomology(const PolyComplex& c, std::optional<Scalar> at = std::nullopt);

  const PolyComplex& complex() const { return complex_; }
  FieldSpec field() const { return complex_.field(); }
  const std::optional<Scalar>& localized_at() const { return at_; }

  std::size_t free_rank(Part p) const { return part_[index(p)].free_rank; }
  bool is_finite() const { return free_rank(Part::plus) == 0 && free_rank(Part::minus) == 0; }
  // Non-unit torsion factors (after localization, if any).
  const std::vector<Poly>& factors(Part p) const { return part_[index(p)].factors; }

  std::size_t dim(Part p) const { return part_[index(p)].dim; }
  GradedSpace dims() const { return {dim(Part::plus), dim(Part::minus)}; }
  bool is_zero() const { return dims().total() == 0; }

  // Cycle columns g_t * z^s; requires is_finite().
  const PolyMatrix& representatives(Part p) const { return part_[index(p)].reps; }
  bool is_cycle(Part p, const PolyMatrix& vectors) const;
  // F-coordinates of each column in the basis above; throws on non-cycles.
  Matrix reduce(Part p, const PolyMatrix& cycles) const;

 private:
  struct PartData {
    std::size_t kernel_offset = 0;  // rank of the outgoing differential
    PolyMatrix vinv, u2;            // kernel coordinates, then module coordinates
    std::vector<std::size_t> slots; // module coordinate index of each factor
    std::vector<Poly> factors;      // factor used for the F-basis (localized)
    std::vector<Poly> moduli;       // full invariant factor d_t
    std::size_t free_rank = 0, dim = 0;
    PolyMatrix reps;
  };
  PartData build(Part p) const;

  PolyComplex complex_;
  std::optional<Scalar> at_;
  std::array<PartData, 2> part_;
};

struct PolyEngine {
  using Map = PolyMatrix;
  using Homology = TorsionModuleHomology;
  std::optional<Scalar> at;
  // Throws NotFredholm if the homology has positive free rank.
  TorsionModuleHomology homology(const PolyComplex& c) const;
};

// Companion matrix of a monic polynomial (acts as z on F[z]/(d) in the basis z^s).
Matrix companion(const Poly& d);

}  // namespace jt
