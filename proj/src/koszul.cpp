#include "jt/koszul.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace jt {

namespace {

constexpr std::uint32_t bit(std::size_t k) { return std::uint32_t{1} << (k - 1); }

// Number of elements of mask below k.
int below(std::uint32_t mask, std::size_t k) { return std::popcount(mask & (bit(k) - 1)); }

// {1..n-1} -> {1..n} - {j}.
std::uint32_t shift_up(std::uint32_t mask, std::size_t j) {
  std::uint32_t low = mask & (bit(j) - 1);
  return low | ((mask & ~low) << 1);
}

void sign_entry(Matrix& m, std::size_t i, std::size_t j, int sign) { m.set(i, j, sign > 0 ? 1L : -1L); }

}  // namespace

ExteriorBasis::ExteriorBasis(std::size_t n) : n_(n) {
  if (n > 20) throw std::invalid_argument("exterior algebra too large");
  std::uint32_t count = std::uint32_t{1} << n;
  subsets_.resize(count);
  for (std::uint32_t m = 0; m < count; ++m) subsets_[m] = m;
  // Same size: lexicographic on increasing element lists, i.e. compare at the
  // lowest differing element; the set containing it comes first.
  std::sort(subsets_.begin(), subsets_.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    std::uint32_t diff = a ^ b;
    std::uint32_t low = diff & (~diff + 1);
    return (a & low) != 0;
  });
  pos_.resize(count);
  for (std::size_t p = 0; p < count; ++p) pos_[subsets_[p]] = p;
}

Part ExteriorBasis::parity(std::uint32_t mask) { return std::popcount(mask) % 2 ? Part::minus : Part::plus; }

std::string ExteriorBasis::label(std::size_t pos) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t k = 1; k <= n_; ++k)
    if (subsets_[pos] & bit(k)) {
      os << (first ? "" : ",") << k;
      first = false;
    }
  os << '}';
  return os.str();
}

Matrix exterior_operator(ExteriorOp kind, std::size_t j, std::size_t n, FieldSpec f) {
  if (j < 1 || j > n) throw std::out_of_range("exterior operator index out of range");
  ExteriorBasis big(n);
  switch (kind) {
    case ExteriorOp::eps:
    case ExteriorOp::eps_star: {
      Matrix m(big.size(), big.size(), f);
      for (std::size_t p = 0; p < big.size(); ++p) {
        std::uint32_t s = big.subset(p);
        if (s & bit(j)) continue;
        int sign = below(s, j) % 2 ? -1 : 1;
        std::size_t q = big.position(s | bit(j));
        if (kind == ExteriorOp::eps)
          sign_entry(m, q, p, sign);
        else
          sign_entry(m, p, q, sign);
      }
      return m;
    }
    case ExteriorOp::iota:
    case ExteriorOp::iota_star: {
      ExteriorBasis small(n - 1);
      Matrix m(big.size(), small.size(), f);
      for (std::size_t p = 0; p < small.size(); ++p) m.set(big.position(shift_up(small.subset(p), j)), p, 1L);
      return kind == ExteriorOp::iota ? m : m.transpose();
    }
  }
  throw std::logic_error("unknown exterior operator");
}

void check_permutation(const std::vector<std::size_t>& sigma, std::size_t n) {
  if (sigma.size() != n) throw std::invalid_argument("permutation has the wrong length");
  std::vector<bool> seen(n + 1, false);
  for (std::size_t k : sigma) {
    if (k < 1 || k > n || seen[k]) throw std::invalid_argument("not a permutation of 1..n");
    seen[k] = true;
  }
}

Matrix exterior_permutation(const std::vector<std::size_t>& sigma, FieldSpec f) {
  std::size_t n = sigma.size();
  check_permutation(sigma, n);
  std::vector<std::size_t> inv(n + 1);
  for (std::size_t k = 1; k <= n; ++k) inv[sigma[k - 1]] = k;
  ExteriorBasis b(n);
  Matrix m(b.size(), b.size(), f);
  for (std::size_t p = 0; p < b.size(); ++p) {
    std::uint32_t s = b.subset(p);
    std::vector<std::size_t> img;
    for (std::size_t k = 1; k <= n; ++k)
      if (s & bit(k)) img.push_back(inv[k]);
    // Sign of sorting the image sequence.
    int inversions = 0;
    std::uint32_t t = 0;
    for (std::size_t a = 0; a < img.size(); ++a) {
      t |= bit(img[a]);
      for (std::size_t c = a + 1; c < img.size(); ++c) inversions += img[a] > img[c];
    }
    sign_entry(m, b.position(t), p, inversions % 2 ? -1 : 1);
  }
  return m;
}

KoszulLayout::KoszulLayout(std::size_t n_, std::size_t dim_, bool shifted_) : n(n_), dim(dim_), shifted(shifted_) {
  ExteriorBasis b(n);
  for (std::size_t p = 0; p < b.size(); ++p) {
    Part s = ExteriorBasis::parity(b.subset(p));
    if (shifted) s = flip(s);
    for (std::size_t e = 0; e < dim; ++e) idx[index(s)].push_back(p * dim + e);
  }
}

PolyTuple poly_tuple(const std::vector<Poly>& polys) {
  if (polys.empty()) throw std::invalid_argument("poly_tuple needs at least one polynomial");
  FieldSpec f = polys.front().field();
  std::vector<PolyMatrix> ops;
  for (const auto& p : polys) {
    PolyMatrix m(1, 1, f);
    m.set(0, 0, p);
    ops.push_back(std::move(m));
  }
  return make_operator_tuple(f, 1, std::move(ops));
}

}  // namespace jt
