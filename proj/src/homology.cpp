#include "jt/graded.hpp"

namespace jt {

HomologyData::HomologyData(const Complex2& c) : complex_(c) {
  for (Part s : kParts) {
    Matrix cycles = kernel_basis(c.d.at(s));
    Matrix bounds = image_basis(c.d.at(flip(s)));
    q_[index(s)] = QuotientSpace(bounds, cycles);
  }
}

bool HomologyData::is_cycle(Part p, const Matrix& vectors) const {
  return (complex_.d.at(p) * vectors).is_zero();
}

Matrix HomologyData::reduce(Part p, const Matrix& cycles) const {
  if (!is_cycle(p, cycles)) throw PreconditionError(std::string("vector is not a cycle in the ") + part_name(p) + " component");
  return q_[index(p)].coordinates(cycles);
}

HomologyData homology(const Complex2& c) { return HomologyData(c); }

}  // namespace jt
