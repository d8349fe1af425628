#include <doctest.h>

#include <random>

#include "oddkh/linalg.hpp"
#include "oddkh/simd/f2_kernels.hpp"

using namespace oddkh;
using simd::Word;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, int sparsity) {
  std::vector<Word> v(n);
  for (Word& w : v) w = sparsity ? (rng() % sparsity == 0 ? rng() : 0) : rng();
  return v;
}

std::vector<const simd::F2Kernels*> kernel_sets() {
  std::vector<const simd::F2Kernels*> k{&simd::scalar_kernels()};
  if (simd::avx2_kernels()) k.push_back(simd::avx2_kernels());
  return k;
}

}  // namespace

TEST_CASE("scalar kernels match the naive definitions") {
  std::mt19937_64 rng(1);
  const auto& k = simd::scalar_kernels();
  for (std::size_t n = 0; n < 40; ++n) {
    auto a = random_words(rng, n, 0), b = random_words(rng, n, 0);
    int parity = 0;
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      parity ^= __builtin_popcountll(a[i] & b[i]) & 1;
      any = any || a[i];
    }
    CHECK(k.and_parity(a.data(), b.data(), n) == parity);
    CHECK(k.any_nonzero(a.data(), n) == any);
    auto c = a;
    k.xor_into(c.data(), b.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(c[i] == (a[i] ^ b[i]));
  }
}

TEST_CASE("AVX2 kernels equal the scalar reference") {
  if (!simd::avx2_kernels()) {
    MESSAGE("AVX2 unavailable; only the scalar set is exercised");
    return;
  }
  const auto& s = simd::scalar_kernels();
  const auto& v = *simd::avx2_kernels();
  std::mt19937_64 rng(2);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = rng() % 70;
    const int sparsity = static_cast<int>(rng() % 4) * 7;
    auto a = random_words(rng, n, sparsity), b = random_words(rng, n, sparsity);
    CHECK(v.and_parity(a.data(), b.data(), n) == s.and_parity(a.data(), b.data(), n));
    CHECK(v.any_nonzero(a.data(), n) == s.any_nonzero(a.data(), n));
    auto x = a, y = a;
    s.xor_into(x.data(), b.data(), n);
    v.xor_into(y.data(), b.data(), n);
    CHECK(x == y);
  }
  // unaligned tails
  std::vector<Word> buf = random_words(rng, 67, 0), other = random_words(rng, 67, 0);
  for (std::size_t off = 0; off < 4; ++off) {
    CHECK(v.and_parity(buf.data() + off, other.data() + off, 60) ==
          s.and_parity(buf.data() + off, other.data() + off, 60));
  }
}

TEST_CASE("bit matrices: rank and product agree across kernels and with sparse rank") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const int r = 1 + rng() % 150, c = 1 + rng() % 150;
    SparseMatrix m(r, c);
    for (int j = 0; j < c; ++j) {
      for (int i = 0; i < r; ++i) {
        if (rng() % 6 == 0) m.add(i, j, 1);
      }
    }
    const BitMatrix b = BitMatrix::from_sparse(m);
    const std::size_t ref = b.rank(simd::scalar_kernels());
    for (const auto* k : kernel_sets()) CHECK(b.rank(*k) == ref);
    CHECK(rank_f2(m) == ref);
    CHECK(rank_f2(m.transpose()) == ref);
    const BitMatrix bt = b.transpose();
    const BitMatrix p0 = b.multiply(bt, simd::scalar_kernels());
    for (const auto* k : kernel_sets()) CHECK(b.multiply(bt, *k) == p0);
    CHECK(p0 == BitMatrix::from_sparse((m * m.transpose()).mod2()));
  }
}

TEST_CASE("active kernels are one of the sets") {
  const std::string name = simd::active_kernels().name;
  bool known = false;
  for (const auto* k : kernel_sets()) known = known || name == k->name;
  CHECK(known);
}
