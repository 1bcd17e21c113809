#include <random>
#include <vector>

#include "doctest.h"
#include "jt/kernels.hpp"
#include "jt/linalg.hpp"
#include "support.hpp"

using namespace jt;
namespace k = jt::kernels;

namespace {

std::vector<std::uint32_t> random_row(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
  return v;
}

}  // namespace

TEST_CASE("avx2 axpy matches the scalar reference") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 10007u, 65521u, 8388593u, 67108859u, 2147483629u}) {
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 17u, 64u, 131u}) {
      for (int trial = 0; trial < 8; ++trial) {
        auto dst = random_row(rng, n, p);
        auto src = random_row(rng, n, p);
        std::uint32_t f = static_cast<std::uint32_t>(rng() % p);
        if (trial == 0) f = p - 1;
        auto ref = dst;
        k::scalar::axpy_mod(ref, src, f, p);
        k::avx2::axpy_mod(dst, src, f, p);
        CHECK(dst == ref);
      }
    }
  }
}

TEST_CASE("avx2 scale matches the scalar reference") {
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {2u, 10007u, 67108859u, 2147483629u}) {
    for (std::size_t n : {0u, 2u, 4u, 7u, 33u}) {
      auto v = random_row(rng, n, p);
      auto ref = v;
      std::uint32_t f = static_cast<std::uint32_t>(rng() % p);
      k::scalar::scale_mod(ref, f, p);
      k::avx2::scale_mod(v, f, p);
      CHECK(v == ref);
    }
  }
}

TEST_CASE("extreme residues stay in range") {
  const std::uint32_t p = 67108859u;  // largest prime below 2^26
  std::vector<std::uint32_t> dst(16, p - 1), src(16, p - 1);
  auto ref = dst;
  k::scalar::axpy_mod(ref, src, p - 1, p);
  k::avx2::axpy_mod(dst, src, p - 1, p);
  CHECK(dst == ref);
  for (auto x : dst) CHECK(x < p);
}

TEST_CASE("dispatch reports an isa and elimination agrees across fields") {
  CHECK((k::active_isa() == k::Isa::scalar || k::active_isa() == k::Isa::avx2));
  std::mt19937_64 rng(4);
  // Integer matrices: the GF(p) determinant is the reduction of the rational one.
  for (int trial = 0; trial < 30; ++trial) {
    Matrix a = test::int_matrix(rng, test::Q, 7, 7, -5, 5, 0.2);
    Matrix b = test::int_matrix(rng, test::GF, 7, 7);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) b.set(i, j, Scalar(test::GF, a.at(i, j).rational()));
    CHECK(determinant(b) == Scalar(test::GF, determinant(a).rational()));
  }
}
