#include "doctest.h"
#include "jt/generators.hpp"
#include "jt/joint_torsion.hpp"
#include "jt/pid.hpp"
#include "support.hpp"

using namespace jt;
using namespace jt::test;

namespace {

Poly z() { return Poly::z(Q); }
Poly c(long v) { return Poly::constant(Q, v); }
Scalar q(long v) { return Scalar(Q, v); }

PolyMatrix pm(const std::vector<std::vector<Poly>>& rows) {
  PolyMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), Q);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
  return m;
}

Poly random_poly(Rng& rng, std::size_t max_degree) {
  std::vector<Scalar> cs;
  std::size_t d = std::uniform_int_distribution<std::size_t>(0, max_degree)(rng);
  for (std::size_t k = 0; k <= d; ++k) cs.push_back(random_scalar(rng, Q, -3, 3));
  return Poly(Q, cs);
}

void check_snf(const PolyMatrix& m) {
  SNFResult s = snf(m);
  CHECK(s.U * m * s.V == s.D);
  CHECK((s.U * s.Uinv).is_identity());
  CHECK((s.V * s.Vinv).is_identity());
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D.at(i, j).is_zero());
  for (std::size_t t = 0; t < s.rank; ++t) {
    CHECK(s.factor(t).lead().is_one());
    if (t + 1 < s.rank) CHECK((s.factor(t + 1) % s.factor(t)).is_zero());
  }
  for (std::size_t t = s.rank; t < std::min(s.D.rows(), s.D.cols()); ++t) CHECK(s.factor(t).is_zero());
}

std::vector<Poly> expand_all(const std::vector<FactoredPoly>& fs) {
  std::vector<Poly> out;
  for (const auto& f : fs) out.push_back(f.expand());
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  Poly f = z() * z() - c(1);
  auto [qq, r] = f.divmod(z() - c(1));
  CHECK(qq == z() + c(1));
  CHECK(r.is_zero());
  CHECK(gcd(f, (z() - c(1)) * (z() + c(2))) == z() - c(1));
  CHECK((inverse_mod(z() + c(1), z() - c(1)) * (z() + c(1)) % (z() - c(1))) == c(1));
  CHECK(f.order_at(q(1)) == 1);
  CHECK(((z() - c(2)).pow(3)).order_at(q(2)) == 3);
  CHECK(f.translate(q(1)) == z() * z() + z().scaled(q(2)));
  CHECK(f.eval(q(3)) == q(8));
  CHECK(Poly(Q).degree() == -1);
  CHECK((z() - c(1)).to_string() == "z - 1");
  FactoredPoly fp{q(2), {{q(1), 1}, {q(1), 2}, {q(3), 0}}};
  CHECK(fp.normalized().roots.size() == 1);
  CHECK(fp.expand() == (z() - c(1)).pow(3).scaled(q(2)));
}

TEST_CASE("snf examples") {
  auto a = pm({{z(), c(0)}, {c(0), z() * z()}});
  CHECK(snf(a).D == a);
  auto b = snf(pm({{z(), c(1)}, {c(0), z()}}));
  CHECK(b.D == pm({{c(1), c(0)}, {c(0), z() * z()}}));
  auto zero = snf(PolyMatrix(2, 3, Q));
  CHECK(zero.rank == 0);
  CHECK(zero.D.is_zero());
}

TEST_CASE("snf invariants on random matrices") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + trial % 3, cc = 1 + (trial / 3) % 3;
    PolyMatrix m(r, cc, Q);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < cc; ++j)
        if (trial % 4 || (i + j) % 2 == 0) m.set(i, j, random_poly(rng, 2));
    check_snf(m);
    check_snf(-m);
    CHECK(snf(m).U == snf(-m).U);
  }
}

TEST_CASE("koszul complexes over F[z]") {
  auto k1 = koszul_complex(poly_tuple({z().scaled(q(3)) + c(1)}));
  CHECK(k1.d.minus().at(0, 0) == z().scaled(q(3)) + c(1));
  auto k2 = koszul_complex(poly_tuple({z() - c(1), z()}));
  CHECK((k2.d.minus() * k2.d.plus()).is_zero());
  CHECK((k2.d.plus() * k2.d.minus()).is_zero());
  // d_1 (a, b) = p a + q b and d_2 c = (-q c, p c)
  CHECK(k2.d.minus() == pm({{z() - c(1), z()}, {c(0), c(0)}}));
  CHECK(k2.d.plus().block(0, 0, 2, 1).is_zero());
  CHECK(k2.d.plus().block(0, 1, 2, 1) == pm({{-z()}, {z() - c(1)}}));
}

TEST_CASE("homology over F[z]") {
  TorsionModuleHomology h1(koszul_complex(poly_tuple({z()})));
  CHECK(h1.dims() == GradedSpace{1, 0});
  TorsionModuleHomology h2(koszul_complex(poly_tuple({z() - c(1), z() - c(2)})));
  CHECK(h2.dims() == GradedSpace{0, 0});
  TorsionModuleHomology h3(koszul_complex(poly_tuple({z(), z()})));
  CHECK(h3.dims() == GradedSpace{1, 1});
  TorsionModuleHomology h4(koszul_complex(poly_tuple({c(0)})));
  CHECK_FALSE(h4.is_finite());
  CHECK(h4.free_rank(Part::plus) == 1);
  CHECK(h4.free_rank(Part::minus) == 1);
  // reduce(c + boundary) = reduce(c)
  auto k = koszul_complex(poly_tuple({(z() - c(1)).pow(2) * z(), z() * (z() + c(2))}));
  TorsionModuleHomology h(k);
  for (Part p : kParts) {
    const PolyMatrix& reps = h.representatives(p);
    CHECK(h.reduce(p, reps).is_identity());
    PolyMatrix x(k.space.dim(flip(p)), reps.cols(), Q);
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) x.set(i, j, z().pow(static_cast<unsigned>(i + j)) + c(1));
    CHECK(h.reduce(p, reps + k.d.at(flip(p)) * x).is_identity());
  }
}

TEST_CASE("induced action matches the companion oracle") {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Poly d = random_factored(rng, Q, 1, 4).expand();
    Poly p = random_poly(rng, 3);
    auto k = koszul_complex(poly_tuple({d}));
    PolyEngine e;
    auto h = e.homology(k);
    PolyMap mult = PolyMap::make_even(pm({{p}}), pm({{p}}));
    GradedMap ind = induced_on_homology(mult, h, h);
    CHECK(ind.plus() == p.eval(companion(d.monic())));
  }
  auto k = koszul_complex(poly_tuple({z() - c(5)}));
  TorsionModuleHomology h(k);
  CHECK(induced_on_homology(PolyMap::make_even(pm({{z()}}), pm({{z()}})), h, h).plus() == mat(Q, {{5}}));
  CHECK(induced_on_homology(PolyMap::identity(k.space, Q), h, h).plus().is_identity());
}

TEST_CASE("index laws over F[z]") {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    Poly f = random_factored(rng, Q, 0, 5).expand(), g = random_factored(rng, Q, 0, 5).expand();
    auto ind = [](const std::vector<Poly>& ps) { return fredholm(poly_tuple(ps), PolyEngine{}).index; };
    CHECK(ind({f}) == -f.degree());
    CHECK(ind({f * g}) == ind({f}) + ind({g}));
    CHECK(ind({f, g}) == 0);
    CHECK(ind({g, f}) == ind({f, g}));
  }
}

TEST_CASE("transition identities over F[z]") {
  Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Poly> ps;
    for (int k = 0; k < 3; ++k) ps.push_back(random_factored(rng, Q, 1, 3, {}, 2).expand());
    Scalar t12 = pid_joint_tau(ps, 1, 2).tau, t23 = pid_joint_tau(ps, 2, 3).tau, t13 = pid_joint_tau(ps, 1, 3).tau;
    CHECK(t12 * t23 == t13);
    CHECK(t12 * pid_joint_tau(ps, 2, 1).tau == q(1));
  }
  Poly f = z() - c(1), g = z() - c(2);
  CHECK(pid_carey_pincus(f, g) * pid_carey_pincus(g, f) == q(1));
}

TEST_CASE("symmetry over F[z]") {
  Rng rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Poly> ps;
    for (int k = 0; k < 3; ++k) ps.push_back(random_factored(rng, Q, 1, 3, {}, 2).expand());
    auto a = poly_tuple(ps);
    auto sigma = random_permutation(rng, 3);
    auto b = permute_tuple(a, sigma).tuple;
    std::vector<std::size_t> inv(4);
    for (std::size_t k = 1; k <= 3; ++k) inv[sigma[k - 1]] = k;
    for (std::size_t i = 1; i <= 3; ++i)
      for (std::size_t j = 1; j <= 3; ++j)
        if (i != j)
          CHECK(joint_tau(a, i, j, PolyEngine{}).tau == joint_tau(b, inv[i], inv[j], PolyEngine{}).tau);
  }
}

TEST_CASE("multiplicativity over F[z]") {
  Rng rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    auto fam = expand_all(random_coprime_family(rng, Q, 3, 0, 3));
    Poly f = fam[0], f2 = fam[1], g = fam[2];
    CHECK(pid_joint_tau({f * f2, g}, 1, 2).tau == pid_joint_tau({f, g}, 1, 2).tau * pid_joint_tau({f2, g}, 1, 2).tau);
  }
  CHECK(pid_joint_tau({(z() - c(1)) * (z() - c(3)), z() - c(2)}, 1, 2).tau ==
        pid_joint_tau({z() - c(1), z() - c(2)}, 1, 2).tau * pid_joint_tau({z() - c(3), z() - c(2)}, 1, 2).tau);
}
