#include <cstdlib>

#include "oddkh/simd/f2_kernels.hpp"

namespace oddkh::simd {

#ifdef ODDKH_HAVE_AVX2
const F2Kernels& avx2_kernel_table();
#endif

const F2Kernels* avx2_kernels() {
#ifdef ODDKH_HAVE_AVX2
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported) return &avx2_kernel_table();
#endif
  return nullptr;
}

const F2Kernels& active_kernels() {
  static const F2Kernels& chosen = [] () -> const F2Kernels& {
    const char* force = std::getenv("ODDKH_FORCE_SCALAR");
    if (force && *force && *force != '0') return scalar_kernels();
    if (const F2Kernels* k = avx2_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace oddkh::simd
