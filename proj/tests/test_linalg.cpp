#include <numeric>

#include "doctest.h"
#include "jt/errors.hpp"
#include "jt/linalg.hpp"
#include "support.hpp"

using namespace jt;
using namespace jt::test;

TEST_CASE("scalar parsing and canonical form") {
  CHECK(Scalar::parse(Q, "6/4").to_string() == "3/2");
  CHECK(Scalar::parse(Q, "-3/7") == Scalar(Q, mpq_class(-3, 7)));
  CHECK(Scalar::parse(Q, "\xE2\x88\x92" "2") == Scalar(Q, -2L));
  CHECK_THROWS_AS(Scalar::parse(Q, "4/-2"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, "abc"), ParseError);
  CHECK(Scalar::parse(GF, "-1").residue() == 10006);
  CHECK((Scalar::parse(GF, "1/2") * Scalar(GF, 2L)).is_one());
  CHECK_THROWS_AS(FieldSpec::prime_field(10), PreconditionError);
}

TEST_CASE("kernel_basis examples") {
  Matrix k = kernel_basis(mat(Q, {{1, 0}, {0, 0}}));
  CHECK(k == mat(Q, {{0}, {1}}));
  CHECK(kernel_basis(Matrix(2, 2, Q)) == Matrix::identity(2, Q));
  CHECK(kernel_basis(mat(Q, {{1, 2}, {2, 4}})) == mat(Q, {{-2}, {1}}));
}

TEST_CASE("image_basis examples") {
  CHECK(image_basis(Matrix::identity(2, Q)) == Matrix::identity(2, Q));
  Matrix z = image_basis(Matrix(2, 2, Q));
  CHECK(z.rows() == 2);
  CHECK(z.cols() == 0);
  CHECK(image_basis(mat(Q, {{1, 2}, {2, 4}})) == mat(Q, {{1}, {2}}));
}

TEST_CASE("determinant examples") {
  CHECK(determinant(mat(Q, {{2}})) == Scalar(Q, 2L));
  CHECK(determinant(mat(Q, {{0, 1}, {1, 0}})) == Scalar(Q, -1L));
  CHECK(determinant(mat(Q, {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == Scalar(Q, -3L));
  CHECK(determinant(Matrix(0, 0, Q)).is_one());
  CHECK_THROWS(determinant(Matrix(2, 3, Q)));
  Matrix frac = Matrix::from_rows({{Scalar::parse(Q, "1/2"), Scalar::parse(Q, "1/3")},
                                   {Scalar::parse(Q, "1/5"), Scalar::parse(Q, "-2/7")}},
                                  Q);
  CHECK(determinant(frac) == Scalar::parse(Q, "-1/7") - Scalar::parse(Q, "1/15"));
}

TEST_CASE("determinant agrees with cofactor expansion for sizes up to 4") {
  std::mt19937_64 rng(11);
  for (FieldSpec f : {Q, GF})
    for (std::size_t n = 0; n <= 4; ++n)
      for (int trial = 0; trial < 60; ++trial) {
        Matrix m = int_matrix(rng, f, n, n, -4, 4, 0.25);
        if (f.is_rational() && trial % 3 == 0 && n > 0) m = m.scaled(Scalar::parse(f, "3/5"));
        CHECK(determinant(m) == cofactor_det(m));
      }
}

TEST_CASE("generalized inverse examples and reflexivity") {
  Matrix m = mat(Q, {{2, 1}, {1, 1}});
  CHECK(generalized_inverse(m) == inverse(m));
  CHECK(generalized_inverse(Matrix(2, 3, Q)) == Matrix(3, 2, Q));
  Matrix e = mat(Q, {{1, 0}, {0, 0}});
  CHECK(generalized_inverse(e) == e);
  std::mt19937_64 rng(5);
  for (FieldSpec f : {Q, GF})
    for (int trial = 0; trial < 80; ++trial) {
      std::size_t r = rng() % 6, c = rng() % 6, k = std::min<std::size_t>(rng() % 4, std::min(r, c));
      Matrix a = int_rank_matrix(rng, f, r, c, k);
      Matrix g = generalized_inverse(a);
      CHECK(a * g * a == a);
      CHECK(g * a * g == g);
      std::vector<std::size_t> ro(r), co(c);
      std::iota(ro.rbegin(), ro.rend(), std::size_t{0});
      std::iota(co.rbegin(), co.rend(), std::size_t{0});
      Matrix g2 = generalized_inverse(a, ro, co);
      CHECK(a * g2 * a == a);
      CHECK(g2 * a * g2 == g2);
    }
}

TEST_CASE("kernel and image bases are consistent") {
  std::mt19937_64 rng(7);
  for (FieldSpec f : {Q, GF})
    for (int trial = 0; trial < 80; ++trial) {
      std::size_t r = rng() % 6, c = rng() % 6, k = std::min<std::size_t>(rng() % 5, std::min(r, c));
      Matrix a = int_rank_matrix(rng, f, r, c, k);
      Matrix kb = kernel_basis(a);
      Matrix ib = image_basis(a);
      CHECK((a * kb).is_zero());
      CHECK(rank(kb) == kb.cols());
      CHECK(rank(ib) == ib.cols());
      CHECK(kb.cols() + ib.cols() == c);
      CHECK(rank(Matrix::hcat(ib, a)) == ib.cols());
    }
}

TEST_CASE("extend_to_complement examples") {
  Matrix i2 = Matrix::identity(2, Q);
  CHECK(extend_to_complement(Matrix(2, 0, Q), i2) == i2);
  CHECK(extend_to_complement(i2, i2).cols() == 0);
  CHECK(extend_to_complement(mat(Q, {{1}, {1}}), i2) == mat(Q, {{1}, {0}}));
  CHECK_THROWS_AS(extend_to_complement(mat(Q, {{1}, {1}}), mat(Q, {{1}, {0}})), PreconditionError);
}

TEST_CASE("solve and left inverse") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix a = int_matrix(rng, Q, 4, 3);
    Matrix x = int_matrix(rng, Q, 3, 2);
    auto sol = solve(a, a * x);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == a * x);
  }
  CHECK_FALSE(solve(mat(Q, {{1}, {0}}), mat(Q, {{0}, {1}})).has_value());
  Matrix w = mat(Q, {{1, 0}, {1, 1}, {0, 2}});
  CHECK((left_inverse(w) * w).is_identity());
}

TEST_CASE("quotient space coordinates ignore the sub space") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix super = image_basis(int_matrix(rng, Q, 5, 4));
    Matrix sub = image_basis(super * int_matrix(rng, Q, super.cols(), 2));
    QuotientSpace q(sub, super);
    CHECK(q.dim() + sub.cols() == super.cols());
    CHECK(q.coordinates(q.representatives()).is_identity());
    Matrix c = super * int_matrix(rng, Q, super.cols(), 1);
    Matrix b = sub * int_matrix(rng, Q, sub.cols(), 1);
    CHECK(q.coordinates(c + b) == q.coordinates(c));
  }
}

TEST_CASE("operations are deterministic") {
  std::mt19937_64 rng(21);
  Matrix a = int_matrix(rng, Q, 5, 6);
  CHECK(kernel_basis(a) == kernel_basis(a));
  CHECK(generalized_inverse(a) == generalized_inverse(a));
  CHECK(rref(a).reduced == rref(a).reduced);
}
