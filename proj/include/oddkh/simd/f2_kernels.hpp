#pragma once

// Bit-row kernels used by F2 elimination. The scalar set is the reference;
// the AVX2 set is picked at runtime when the CPU supports it and
// ODDKH_FORCE_SCALAR is unset.

#include <cstddef>
#include <cstdint>

namespace oddkh::simd {

using Word = std::uint64_t;

struct F2Kernels {
  const char* name;
  /// dst[k] ^= src[k]
  void (*xor_into)(Word* dst, const Word* src, std::size_t words);
  /// parity of popcount(a & b)
  int (*and_parity)(const Word* a, const Word* b, std::size_t words);
  /// any bit set
  bool (*any_nonzero)(const Word* a, std::size_t words);
};

const F2Kernels& scalar_kernels();
/// Null when the AVX2 build is missing or the CPU lacks AVX2.
const F2Kernels* avx2_kernels();
const F2Kernels& active_kernels();

}  // namespace oddkh::simd
