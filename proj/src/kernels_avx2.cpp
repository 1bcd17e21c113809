#include "jt/kernels.hpp"

#include <cassert>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define JT_HAVE_X86 1
#endif

namespace jt::kernels::avx2 {

#ifdef JT_HAVE_X86

namespace {

// r = x mod p for exact doubles 0 <= x < 2^53.
__attribute__((target("avx2,fma"))) inline __m256d reduce(__m256d x, __m256d pv, __m256d pinv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, pinv));
  __m256d r = _mm256_fnmadd_pd(q, pv, x);
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), pv));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pv, _CMP_GE_OQ), pv));
  return r;
}

}  // namespace

__attribute__((target("avx2,fma"))) void axpy_mod(Row dst, ConstRow src, std::uint32_t factor,
                                                  std::uint32_t p) {
  assert(dst.size() == src.size());
  if (p >= kSimdModulusLimit) return scalar::axpy_mod(dst, src, factor, p);
  const std::size_t n = dst.size();
  const __m256d pv = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d fv = _mm256_set1_pd(static_cast<double>(factor));
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d d = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst.data() + k)));
    __m256d s = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src.data() + k)));
    __m256d r = reduce(_mm256_fmadd_pd(fv, s, d), pv, pinv);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst.data() + k), _mm256_cvttpd_epi32(r));
  }
  if (k < n) scalar::axpy_mod(dst.subspan(k), src.subspan(k), factor, p);
}

__attribute__((target("avx2,fma"))) void scale_mod(Row v, std::uint32_t factor, std::uint32_t p) {
  if (p >= kSimdModulusLimit) return scalar::scale_mod(v, factor, p);
  const std::size_t n = v.size();
  const __m256d pv = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d fv = _mm256_set1_pd(static_cast<double>(factor));
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d x = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(v.data() + k)));
    __m256d r = reduce(_mm256_mul_pd(fv, x), pv, pinv);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(v.data() + k), _mm256_cvttpd_epi32(r));
  }
  if (k < n) scalar::scale_mod(v.subspan(k), factor, p);
}

#else

void axpy_mod(Row dst, ConstRow src, std::uint32_t factor, std::uint32_t p) {
  scalar::axpy_mod(dst, src, factor, p);
}
void scale_mod(Row v, std::uint32_t factor, std::uint32_t p) { scalar::scale_mod(v, factor, p); }

#endif

}  // namespace jt::kernels::avx2
