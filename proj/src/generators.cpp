#include "jt/generators.hpp"

#include <algorithm>
#include <numeric>

#include "jt/linalg.hpp"

namespace jt {

MatrixTuple random_commuting_tuple(Rng& rng, FieldSpec f, std::size_t n, std::size_t dim) {
  std::vector<Matrix> blocks(n);
  std::vector<std::vector<Matrix>> per_op(n);
  std::size_t used = 0;
  std::uniform_int_distribution<std::size_t> size_dist(1, 3);
  std::bernoulli_distribution coin(0.5);
  while (used < dim) {
    std::size_t b = std::min(size_dist(rng), dim - used);
    Matrix base(b, b, f);
    if (coin(rng)) {
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = i + 1; j < b; ++j) base.set(i, j, random_scalar(rng, f, -2, 2));
    } else {
      base = random_matrix(rng, f, b, b, 0.3);
    }
    bool singular_block = coin(rng);
    Matrix base2 = base * base;
    for (std::size_t k = 0; k < n; ++k) {
      Scalar c0 = singular_block && coin(rng) ? Scalar::zero(f) : random_scalar(rng, f, -2, 2);
      Matrix blk = Matrix::identity(b, f).scaled(c0) + base.scaled(random_scalar(rng, f, -2, 2)) +
                   base2.scaled(random_scalar(rng, f, -1, 1));
      per_op[k].push_back(std::move(blk));
    }
    used += b;
  }
  Matrix s = random_invertible(rng, f, dim), si = inverse(s);
  std::vector<Matrix> ops;
  for (std::size_t k = 0; k < n; ++k) ops.push_back(s * Matrix::block_diag(per_op[k], f) * si);
  return make_operator_tuple(f, dim, std::move(ops));
}

FactoredPoly random_factored(Rng& rng, FieldSpec f, std::size_t min_degree, std::size_t max_degree,
                             const std::vector<Scalar>& excluded, int root_bound) {
  std::vector<Scalar> pool;
  for (int r = -root_bound; r <= root_bound; ++r) {
    Scalar s(f, static_cast<long>(r));
    if (std::find(excluded.begin(), excluded.end(), s) == excluded.end() &&
        std::find(pool.begin(), pool.end(), s) == pool.end())
      pool.push_back(s);
  }
  std::size_t degree = std::uniform_int_distribution<std::size_t>(min_degree, max_degree)(rng);
  FactoredPoly out{random_nonzero_scalar(rng, f, 3), {}};
  if (pool.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t k = 0; k < degree; ++k) out.roots.emplace_back(pool[pick(rng)], 1u);
  return out.normalized();
}

std::vector<FactoredPoly> random_coprime_family(Rng& rng, FieldSpec f, std::size_t count, std::size_t min_degree,
                                                std::size_t max_degree) {
  std::vector<FactoredPoly> out;
  std::vector<Scalar> used;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(random_factored(rng, f, min_degree, max_degree, used, 4 + static_cast<int>(max_degree * count)));
    for (const auto& [r, m] : out.back().roots) used.push_back(r);
  }
  return out;
}

std::pair<MatrixTuple, MatrixTuple> random_tuple_pair(Rng& rng, FieldSpec f, std::size_t n, std::size_t dim) {
  auto all = random_commuting_tuple(rng, f, n + 1, dim);
  std::vector<Matrix> a{all[1]}, b{all[2]};
  for (std::size_t k = 3; k <= n + 1; ++k) {
    a.push_back(all[k]);
    b.push_back(all[k]);
  }
  return {make_operator_tuple(f, dim, a), make_operator_tuple(f, dim, b)};
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{1});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace jt
