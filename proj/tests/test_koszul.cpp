#include "doctest.h"
#include "jt/generators.hpp"
#include "jt/koszul.hpp"
#include "support.hpp"

using namespace jt;
using namespace jt::test;

namespace {

Matrix op(ExteriorOp k, std::size_t j, std::size_t n) { return exterior_operator(k, j, n, Q); }

}  // namespace

TEST_CASE("exterior basis order") {
  ExteriorBasis b(3);
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < b.size(); ++p) labels.push_back(b.label(p));
  CHECK(labels == std::vector<std::string>{"{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"});
}

TEST_CASE("exterior operator examples") {
  CHECK(op(ExteriorOp::eps_star, 1, 1) == mat(Q, {{0, 1}, {0, 0}}));
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t j = 1; j <= n; ++j) {
      Matrix e = op(ExteriorOp::eps, j, n), es = op(ExteriorOp::eps_star, j, n);
      CHECK((e * e).is_zero());
      CHECK((es * e + e * es).is_identity());
    }
  // e_2 ^ e_1 = -e_{12}
  Matrix e2 = op(ExteriorOp::eps, 2, 2);
  ExteriorBasis b(2);
  CHECK(e2.at(b.position(0b11), b.position(0b01)) == Scalar(Q, -1L));
  CHECK(op(ExteriorOp::eps, 1, 2).at(b.position(0b11), b.position(0b10)) == Scalar(Q, 1L));
}

TEST_CASE("exterior operator identities") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        Matrix ei = op(ExteriorOp::eps_star, i, n), ej = op(ExteriorOp::eps_star, j, n);
        if (i != j) CHECK((ei * ej + ej * ei).is_zero());
      }
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t j = 1; j <= n; ++j) {
      Matrix is = op(ExteriorOp::iota_star, j, n), io = op(ExteriorOp::iota, j, n);
      CHECK((is * io).is_identity());
      for (std::size_t i = 1; i <= n - 1; ++i) {
        std::size_t shifted = i < j ? i : i + 1;
        CHECK(op(ExteriorOp::eps_star, i, n - 1) * is == is * op(ExteriorOp::eps_star, shifted, n));
        CHECK(op(ExteriorOp::eps_star, shifted, n) * io == io * op(ExteriorOp::eps_star, i, n - 1));
      }
      CHECK((op(ExteriorOp::eps_star, j, n) * io).is_zero());
    }
  CHECK_THROWS(op(ExteriorOp::eps, 3, 2));
}

TEST_CASE("koszul complex examples") {
  auto a = make_operator_tuple(Q, 2, std::vector<Matrix>{mat(Q, {{1, 0}, {0, 0}})});
  auto k = koszul_complex(a);
  CHECK(k.d.minus() == a[1]);
  CHECK(k.d.plus().is_zero());
  auto h = homology(k);
  CHECK(h.dims() == GradedSpace{1, 1});

  auto z = make_operator_tuple(Q, 1, std::vector<Matrix>{Matrix(1, 1, Q), Matrix(1, 1, Q)});
  CHECK(homology(koszul_complex(z)).dims() == GradedSpace{2, 2});

  CHECK_THROWS_AS(make_operator_tuple(Q, 2, std::vector<Matrix>{mat(Q, {{0, 1}, {0, 0}}), mat(Q, {{0, 0}, {1, 0}})}),
                  NonCommutingError);
}

TEST_CASE("finite tuples have index zero") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 3, dim = 1 + trial % 5;
    auto a = random_commuting_tuple(rng, trial % 2 ? GF : Q, n, dim);
    auto h = homology(koszul_complex(a));
    CHECK(h.dim(Part::plus) == h.dim(Part::minus));
  }
}

TEST_CASE("remove_entry") {
  auto a = make_operator_tuple(Q, 1, std::vector<Matrix>{mat(Q, {{1}}), mat(Q, {{2}}), mat(Q, {{3}})});
  auto b = remove_entry(a, 2);
  REQUIRE(b.size() == 2);
  CHECK(b[1] == mat(Q, {{1}}));
  CHECK(b[2] == mat(Q, {{3}}));
  auto e = remove_entry(remove_entry(b, 1), 1);
  CHECK(e.size() == 0);
  CHECK(koszul_complex(e).space == GradedSpace{1, 0});
  CHECK_THROWS(remove_entry(a, 4));
}

TEST_CASE("triangles X are homotopy exact (matrices)") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 3, dim = trial % 6;
    auto a = random_commuting_tuple(rng, trial % 2 ? GF : Q, n, dim);
    for (std::size_t j = 1; j <= n; ++j) {
      auto x = triangle_X(a, j);
      auto rep = verify_homotopy_exact(x, FiniteEngine{});
      INFO(rep.summary());
      CHECK(rep.ok());
      CHECK(six_term_exact(triangle_homology(x, FiniteEngine{}).v));
    }
  }
}

TEST_CASE("triangles X are homotopy exact (polynomials)") {
  Poly z = Poly::z(Q);
  Poly one = Poly::constant(Q, 1);
  std::vector<std::vector<Poly>> cases = {
      {z - one, z - Poly::constant(Q, 2)},
      {z, z},
      {(z - one) * (z - one), z * z, z - one},
  };
  for (const auto& c : cases) {
    auto a = poly_tuple(c);
    for (std::size_t j = 1; j <= a.size(); ++j) {
      auto x = triangle_X(a, j);
      auto rep = verify_homotopy_exact(x, PolyEngine{});
      INFO(rep.summary());
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("homotopy with a dropped component fails") {
  auto a = make_operator_tuple(Q, 1, std::vector<Matrix>{mat(Q, {{0}}), mat(Q, {{0}})});
  auto x = triangle_X(a, 1);
  (*x.t)[1] = GradedMap::zero((*x.t)[1].src, (*x.t)[1].tgt, true, Q);
  auto rep = verify_homotopy_exact(x, FiniteEngine{});
  CHECK_FALSE(rep.ok());
}

TEST_CASE("permute_tuple intertwines the differentials") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + trial % 3;
    auto a = random_commuting_tuple(rng, Q, n, 3);
    auto p = permute_tuple(a, random_permutation(rng, n));
    auto ka = koszul_complex(a), kb = koszul_complex(p.tuple);
    CHECK(compose(kb.d, p.iso) == compose(p.iso, ka.d));
    CHECK(homology(ka).dims() == homology(kb).dims());
  }
  auto zero2 = make_operator_tuple(Q, 1, std::vector<Matrix>{mat(Q, {{0}}), mat(Q, {{0}})});
  auto p = permute_tuple(zero2, {2, 1});
  // e_{} -> e_{}, e_1 -> e_2, e_2 -> e_1, e_{12} -> e_2 ^ e_1 = -e_{12}
  CHECK(p.iso.plus() == mat(Q, {{1, 0}, {0, -1}}));
  CHECK(p.iso.minus() == mat(Q, {{0, 1}, {1, 0}}));
  CHECK(permute_tuple(zero2, {1, 2}).iso.plus().is_identity());
  CHECK_THROWS(permute_tuple(zero2, {1, 1}));
}
