#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Row kernels for elimination over GF(p). Every operand is a residue in
// [0, p). The AVX2 path evaluates products in double precision, which is
// exact while p < 2^26; larger moduli always take the scalar path.
namespace jt::kernels {

using Row = std::span<std::uint32_t>;
using ConstRow = std::span<const std::uint32_t>;

inline constexpr std::uint32_t kSimdModulusLimit = 1u << 26;

namespace scalar {
// dst[k] = dst[k] + factor * src[k]  (mod p)
void axpy_mod(Row dst, ConstRow src, std::uint32_t factor, std::uint32_t p);
// v[k] = factor * v[k]  (mod p)
void scale_mod(Row v, std::uint32_t factor, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
void axpy_mod(Row dst, ConstRow src, std::uint32_t factor, std::uint32_t p);
void scale_mod(Row v, std::uint32_t factor, std::uint32_t p);
}  // namespace avx2

enum class Isa { scalar, avx2 };

// Detected once; JT_FORCE_SCALAR=1 in the environment pins the scalar path.
Isa active_isa();
const char* isa_name(Isa isa);

void axpy_mod(Row dst, ConstRow src, std::uint32_t factor, std::uint32_t p);
void scale_mod(Row v, std::uint32_t factor, std::uint32_t p);

}  // namespace jt::kernels
