#include "jt/random.hpp"

namespace jt {

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Scalar random_scalar(Rng& rng, FieldSpec f, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return Scalar(f, static_cast<long>(d(rng)));
}

Scalar random_nonzero_scalar(Rng& rng, FieldSpec f, int bound) {
  for (;;) {
    Scalar s = random_scalar(rng, f, -bound, bound);
    if (!s.is_zero()) return s;
  }
}

Matrix random_matrix(Rng& rng, FieldSpec f, std::size_t rows, std::size_t cols, double zero_prob) {
  std::bernoulli_distribution zero(zero_prob);
  Matrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!zero(rng)) m.set(i, j, random_scalar(rng, f));
  return m;
}

Matrix random_invertible(Rng& rng, FieldSpec f, std::size_t n) {
  Matrix lower = Matrix::identity(n, f), upper = Matrix::identity(n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower.set(i, j, random_scalar(rng, f, -2, 2));
      upper.set(j, i, random_scalar(rng, f, -2, 2));
    }
  std::vector<Scalar> diag;
  for (std::size_t i = 0; i < n; ++i) diag.push_back(random_nonzero_scalar(rng, f, 3));
  return lower * upper * Matrix::diagonal(f, diag);
}

ExactEndo random_exact_endo(Rng& rng, FieldSpec f, std::size_t n) {
  std::size_t r = n == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, n)(rng);
  Matrix ap(n, n, f), am(n, n, f);
  for (std::size_t i = 0; i < r; ++i) ap.set(i, i, 1L);
  for (std::size_t i = r; i < n; ++i) am.set(i, i, 1L);
  Matrix sp = random_invertible(rng, f, n), sm = random_invertible(rng, f, n);
  Matrix spi = inverse(sp), smi = inverse(sm);
  GradedMap alpha = GradedMap::make_odd(sm * ap * spi, sp * am * smi);
  return {alpha, determinant(sm) / determinant(sp)};
}

Complex2 random_complex(Rng& rng, FieldSpec f, std::size_t h_plus, std::size_t h_minus, std::size_t r_plus,
                        std::size_t r_minus) {
  // K_+ = B_+ (r_minus) + H_+ + C_+ (r_plus), K_- = B_- (r_plus) + H_- + C_- (r_minus).
  std::size_t np = r_minus + h_plus + r_plus, nm = r_plus + h_minus + r_minus;
  Matrix dp(nm, np, f), dm(np, nm, f);
  for (std::size_t i = 0; i < r_plus; ++i) dp.set(i, r_minus + h_plus + i, 1L);
  for (std::size_t i = 0; i < r_minus; ++i) dm.set(i, r_plus + h_minus + i, 1L);
  Matrix sp = random_invertible(rng, f, np), sm = random_invertible(rng, f, nm);
  GradedMap d = GradedMap::make_odd(sm * dp * inverse(sp), sp * dm * inverse(sm));
  return make_complex(d.src, d);
}

}  // namespace jt
