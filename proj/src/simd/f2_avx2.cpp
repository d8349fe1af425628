#include <immintrin.h>

#include "oddkh/simd/f2_kernels.hpp"

namespace oddkh::simd {

namespace {

void xor_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t k = 0;
  for (; k + 4 <= words; k += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), _mm256_xor_si256(a, b));
  }
  for (; k < words; ++k) dst[k] ^= src[k];
}

int and_parity(const Word* a, const Word* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= words; k += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
  }
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  Word folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
  for (; k < words; ++k) folded ^= a[k] & b[k];
  return __builtin_parityll(folded);
}

bool any_nonzero(const Word* a, std::size_t words) {
  std::size_t k = 0;
  for (; k + 4 <= words; k += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    if (!_mm256_testz_si256(x, x)) return true;
  }
  for (; k < words; ++k) {
    if (a[k]) return true;
  }
  return false;
}

}  // namespace

const F2Kernels& avx2_kernel_table() {
  static const F2Kernels k{"avx2", xor_into, and_parity, any_nonzero};
  return k;
}

}  // namespace oddkh::simd
