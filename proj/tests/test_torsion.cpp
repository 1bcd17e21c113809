#include <numeric>

#include "doctest.h"
#include "jt/random.hpp"
#include "jt/torsion.hpp"
#include "support.hpp"

using namespace jt;
using namespace jt::test;

namespace {

GradedMap odd(const Matrix& p, const Matrix& m) { return GradedMap::make_odd(p, m); }

Matrix pseudo_inverse_conjugated(Rng& rng, const Matrix& m) {
  Matrix p = random_invertible(rng, m.field(), m.cols());
  Matrix q = random_invertible(rng, m.field(), m.rows());
  return p * generalized_inverse(q * m * p) * q;
}

}  // namespace

TEST_CASE("is_exact_endo examples") {
  CHECK(is_exact_endo(odd(Matrix(0, 0, Q), Matrix(0, 0, Q))));
  CHECK(is_exact_endo(odd(mat(Q, {{2}}), Matrix(1, 1, Q))));
  CHECK_FALSE(is_exact_endo(odd(Matrix(0, 1, Q), Matrix(1, 0, Q))));
}

TEST_CASE("torsion_scalar examples") {
  CHECK(torsion_scalar(odd(mat(Q, {{2}}), Matrix(1, 1, Q))).value == Scalar(Q, 2L));
  CHECK(torsion_scalar(odd(Matrix(1, 1, Q), mat(Q, {{3}}))).value == Scalar::parse(Q, "1/3"));
  auto t = torsion_scalar(odd(mat(Q, {{0, 0}, {1, 0}}), mat(Q, {{0, 0}, {5, 0}})));
  CHECK(t.value == Scalar::parse(Q, "-1/5"));
  CHECK_THROWS_AS(torsion_scalar(odd(Matrix(1, 1, Q), Matrix(1, 1, Q))), PreconditionError);
}

TEST_CASE("torsion is independent of the pseudo-inverse") {
  Rng rng(17);
  for (FieldSpec f : {Q, GF})
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t n = rng() % 6;
      ExactEndo e = random_exact_endo(rng, f, n);
      const Matrix& am = e.alpha.minus();
      std::vector<std::size_t> rev(n);
      std::iota(rev.rbegin(), rev.rend(), std::size_t{0});
      Matrix g1 = generalized_inverse(am);
      Matrix g2 = generalized_inverse(am, rev, rev);
      Matrix g3 = pseudo_inverse_conjugated(rng, am);
      Scalar t1 = torsion_scalar(e.alpha, g1).value;
      CHECK(t1 == torsion_scalar(e.alpha, g2).value);
      CHECK(t1 == torsion_scalar(e.alpha, g3).value);
      CHECK(t1 == e.expected_torsion);
    }
}

TEST_CASE("naturality under even isomorphisms") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + rng() % 5;
    ExactEndo e = random_exact_endo(rng, Q, n);
    Matrix fp = random_invertible(rng, Q, n), fm = random_invertible(rng, Q, n);
    GradedMap conj = odd(fm * e.alpha.plus() * inverse(fp), fp * e.alpha.minus() * inverse(fm));
    CHECK(torsion_scalar(conj).value == determinant(fm) * torsion_scalar(e.alpha).value / determinant(fp));
  }
}

TEST_CASE("triangle torsion examples") {
  GradedMap z = GradedMap::zero({0, 0}, {0, 0}, true, Q);
  CHECK(triangle_torsion({z, z, z}).value.is_one());
  // V1 = (1,0), V2 = (0,1), V3 = 0.
  GradedMap v1 = odd(mat(Q, {{7}}), Matrix(0, 0, Q));
  GradedMap v2 = GradedMap::zero({0, 1}, {0, 0}, true, Q);
  GradedMap v3 = GradedMap::zero({0, 0}, {1, 0}, true, Q);
  CHECK(triangle_torsion({v1, v2, v3}).value == Scalar(Q, 7L));
}

TEST_CASE("triangle torsion matches a brute-force block determinant") {
  // Spaces V^k = (1,1); v1 = identity-like odd iso pieces arranged to be exact.
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    Scalar a = random_nonzero_scalar(rng, Q), b = random_nonzero_scalar(rng, Q), c = random_nonzero_scalar(rng, Q);
    // v1_+ iso V1+ -> V2-, v2_- iso V2- ... forced zeros elsewhere keep exactness.
    GradedMap v1 = odd(Matrix::diagonal(Q, {a}), Matrix(1, 1, Q));
    GradedMap v2 = odd(Matrix(1, 1, Q), Matrix(1, 1, Q));
    GradedMap v3 = odd(Matrix::diagonal(Q, {c}), Matrix::diagonal(Q, {b}));
    // v_+ rows (V1-,V2-,V3-), cols (V1+,V2+,V3+); v_- rows (V1+,..), cols (V1-,..).
    auto tri = std::array<GradedMap, 3>{v1, v2, v3};
    GradedMap full = assemble_triangle(tri);
    if (!is_exact_endo(full)) continue;
    Matrix vp = full.plus(), vm = full.minus();
    Scalar brute = cofactor_det(vp + generalized_inverse(vm));
    CHECK(triangle_torsion(tri).value == brute);
  }
  // A cyclic triangle of identities on V^k = (1,1) is not exact; scaled variants are checked above.
  GradedMap id = odd(Matrix::identity(1, Q), Matrix::identity(1, Q));
  CHECK_FALSE(is_exact_endo(assemble_triangle({id, id, id})));
}

TEST_CASE("comparison numbers") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = rng() % 5;
    ExactEndo e = random_exact_endo(rng, Q, n);
    const GradedMap& v = e.alpha;
    CHECK(comparison_number(v, v).is_one());
    CHECK(comparison_via_quotients(v, v).is_one());
    Scalar sign = Scalar(Q, n % 2 ? -1L : 1L);
    CHECK(comparison_number(v, -v) == sign);
    CHECK(comparison_via_quotients(v, -v) == sign);
    // h = c v: comparison = c^{rank v_- - rank v_+}.
    Scalar c = random_nonzero_scalar(rng, Q, 4);
    GradedMap h = odd(v.plus().scaled(c), v.minus().scaled(c));
    long expo = static_cast<long>(rank(v.minus())) - static_cast<long>(rank(v.plus()));
    CHECK(comparison_number(v, h) == c.pow(expo));
    CHECK(comparison_via_quotients(v, h) == c.pow(expo));
  }
}

TEST_CASE("quotient formula on direct sums of scaled pairs") {
  Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    ExactEndo e1 = random_exact_endo(rng, Q, 1 + rng() % 3);
    ExactEndo e2 = random_exact_endo(rng, Q, 1 + rng() % 3);
    Scalar c1 = random_nonzero_scalar(rng, Q), c2 = random_nonzero_scalar(rng, Q);
    auto scale = [](const GradedMap& a, const Scalar& c) {
      return GradedMap::make_odd(a.plus().scaled(c), a.minus().scaled(c));
    };
    GradedMap v = direct_sum_maps<Matrix>({e1.alpha, e2.alpha}, Q);
    GradedMap h = direct_sum_maps<Matrix>({scale(e1.alpha, c1), scale(e2.alpha, c2)}, Q);
    // Conjugate by a random even isomorphism to mix the blocks.
    std::size_t np = v.src.plus, nm = v.src.minus;
    Matrix sp = random_invertible(rng, Q, np), sm = random_invertible(rng, Q, nm);
    Matrix spi = inverse(sp), smi = inverse(sm);
    auto conj = [&](const GradedMap& a) {
      return GradedMap::make_odd(sm * a.plus() * spi, sp * a.minus() * smi);
    };
    CHECK(comparison_via_quotients(conj(v), conj(h)) == comparison_number(conj(v), conj(h)));
  }
}
