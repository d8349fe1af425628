#include "oddkh/simd/f2_kernels.hpp"

namespace oddkh::simd {

namespace {

void xor_into(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t k = 0; k < words; ++k) dst[k] ^= src[k];
}

int and_parity(const Word* a, const Word* b, std::size_t words) {
  Word acc = 0;
  for (std::size_t k = 0; k < words; ++k) acc ^= a[k] & b[k];
  return __builtin_parityll(acc);
}

bool any_nonzero(const Word* a, std::size_t words) {
  Word acc = 0;
  for (std::size_t k = 0; k < words; ++k) acc |= a[k];
  return acc != 0;
}

}  // namespace

const F2Kernels& scalar_kernels() {
  static const F2Kernels k{"scalar", xor_into, and_parity, any_nonzero};
  return k;
}

}  // namespace oddkh::simd
