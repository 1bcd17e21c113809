#include "jt/bitriangle.hpp"

#include <sstream>

namespace jt {

bool BitriangleReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::vector<BitriangleCheck> BitriangleReport::failures() const {
  std::vector<BitriangleCheck> out;
  for (const auto& c : checks)
    if (!c.ok) out.push_back(c);
  return out;
}

std::string BitriangleReport::summary() const {
  std::ostringstream os;
  auto f = failures();
  if (f.empty()) return "ok (" + std::to_string(checks.size()) + " checks)";
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k) os << "; ";
    os << f[k].kind << " (" << f[k].i << "," << f[k].j << "): " << f[k].detail;
  }
  return os.str();
}

std::array<std::array<std::size_t, 2>, 3> diagonal_cells(std::size_t k) {
  std::array<std::array<std::size_t, 2>, 3> out;
  for (std::size_t j = 0; j < 3; ++j) out[j] = {cyc(k, -1 - static_cast<long>(j)), j};
  return out;
}

namespace {

struct Offsets {
  Grid<std::array<std::size_t, 2>> at;
  GradedSpace total;
};

Offsets diagonal_offsets(const Grid<GradedSpace>& dims) {
  Offsets o;
  for (std::size_t k = 0; k < 3; ++k)
    for (auto [i, j] : diagonal_cells(k)) {
      o.at[i][j] = {o.total.plus, o.total.minus};
      o.total = o.total + dims[i][j];
    }
  return o;
}

GradedMap assemble(const Grid<GradedMap>& maps, const Offsets& o, bool vertical, FieldSpec f) {
  GradedMap out = GradedMap::zero(o.total, o.total, true, f);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t ti = vertical ? cyc(i, 1) : i, tj = vertical ? j : cyc(j, 1);
      for (Part s : kParts) {
        const Matrix& b = maps[i][j].at(s);
        if (b.rows() == 0 || b.cols() == 0) continue;
        out.part[index(s)].set_block(o.at[ti][tj][index(flip(s))], o.at[i][j][index(s)], b);
      }
    }
  return out;
}

}  // namespace

std::array<GradedMap, 2> bitriangle_endomorphisms(const BitriangleHomology& hx) {
  Offsets o = diagonal_offsets(hx.dims);
  FieldSpec f = hx.v[0][0].field();
  return {assemble(hx.v, o, true, f), assemble(hx.h, o, false, f)};
}

std::array<int, 2> theta_sign(const Grid<GradedSpace>& dims) {
  std::array<int, 2> out{1, 1};
  // cells a = (i, j) before b in column-major order but after it in row-major order
  for (Part p : kParts) {
    std::size_t exponent = 0;
    for (std::size_t ia = 0; ia < 3; ++ia)
      for (std::size_t ja = 0; ja < 3; ++ja)
        for (std::size_t ib = 0; ib < 3; ++ib)
          for (std::size_t jb = 0; jb < 3; ++jb) {
            bool col_before = ja < jb || (ja == jb && ia < ib);
            bool row_after = ia > ib || (ia == ib && ja > jb);
            if (col_before && row_after) exponent += dims[ia][ja].dim(p) * dims[ib][jb].dim(p);
          }
    out[index(p)] = exponent % 2 ? -1 : 1;
  }
  return out;
}

ComparisonReport compare_homology(const BitriangleHomology& hx) {
  ComparisonReport rep;
  FieldSpec f = hx.v[0][0].field();
  rep.dims = hx.dims;
  rep.T_v = rep.T_h = Scalar::one(f);
  for (std::size_t k = 0; k < 3; ++k) {
    rep.columns[k] = triangle_torsion({hx.v[0][k], hx.v[1][k], hx.v[2][k]}).value;
    rep.rows[k] = triangle_torsion({hx.h[k][0], hx.h[k][1], hx.h[k][2]}).value;
    rep.T_v *= rep.columns[k];
    rep.T_h *= rep.rows[k];
  }
  rep.theta_sign = theta_sign(hx.dims);
  Scalar conj = rep.theta() < 0 ? -rep.T_h : rep.T_h;
  rep.corollary = rep.T_v == conj;

  auto [v, h] = bitriangle_endomorphisms(hx);
  rep.comparison = comparison_number(v, h);
  QuotientComparisonData q = quotient_comparison_data(v, h);
  rep.det_plus = q.det_plus;
  rep.det_minus = q.det_minus;
  rep.via_quotients = q.det_plus * q.det_minus;
  rep.verdict = rep.comparison.is_one() && rep.corollary && rep.via_quotients == rep.comparison;
  return rep;
}

}  // namespace jt
