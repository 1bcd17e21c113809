#include "jt/kernels.hpp"

#include <cassert>

namespace jt::kernels::scalar {

void axpy_mod(Row dst, ConstRow src, std::uint32_t factor, std::uint32_t p) {
  assert(dst.size() == src.size());
  const std::uint64_t f = factor;
  for (std::size_t k = 0; k < dst.size(); ++k)
    dst[k] = static_cast<std::uint32_t>((dst[k] + f * src[k]) % p);
}

void scale_mod(Row v, std::uint32_t factor, std::uint32_t p) {
  const std::uint64_t f = factor;
  for (auto& x : v) x = static_cast<std::uint32_t>(f * x % p);
}

}  // namespace jt::kernels::scalar
