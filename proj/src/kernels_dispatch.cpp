#include <cstdlib>
#include <cstring>

#include "jt/kernels.hpp"

namespace jt::kernels {

namespace {

Isa detect() {
  const char* force = std::getenv("JT_FORCE_SCALAR");
  if (force && std::strcmp(force, "0") != 0 && *force) return Isa::scalar;
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::avx2;
#endif
  return Isa::scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void axpy_mod(Row dst, ConstRow src, std::uint32_t factor, std::uint32_t p) {
  if (factor == 0) return;
  if (active_isa() == Isa::avx2)
    avx2::axpy_mod(dst, src, factor, p);
  else
    scalar::axpy_mod(dst, src, factor, p);
}

void scale_mod(Row v, std::uint32_t factor, std::uint32_t p) {
  if (active_isa() == Isa::avx2)
    avx2::scale_mod(v, factor, p);
  else
    scalar::scale_mod(v, factor, p);
}

}  // namespace jt::kernels
