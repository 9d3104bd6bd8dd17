#include "hf/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define HF_HAVE_X86 1
#include <immintrin.h>

#include <bit>
#endif

namespace hf::simd {

#if HF_HAVE_X86
namespace {

#define HF_AVX2 __attribute__((target("avx2")))

HF_AVX2 inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
HF_AVX2 inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

HF_AVX2 void or_into(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  for (; i < n; ++i) dst[i] |= src[i];
}

HF_AVX2 void and_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

HF_AVX2 void xor_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_xor_si256(load(a + i), load(b + i)));
  for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}

// _mm256_andnot_si256(x, y) computes ~x & y.
HF_AVX2 void andnot_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_andnot_si256(load(b + i), load(a + i)));
  for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

HF_AVX2 bool any_andnot(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_andnot_si256(load(b + i), load(a + i));
    if (!_mm256_testz_si256(v, v)) return true;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return true;
  return false;
}

// Nibble lookup popcount, summed per 64-bit lane with sad_epu8.
HF_AVX2 std::size_t popcount(const Word* a, std::size_t n) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = load(a + i);
    const __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(v, low));
    const __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(v, 4), low));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256()));
  }
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

HF_AVX2 std::ptrdiff_t highest_diff(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = n;
  while (i % 4 != 0) {
    --i;
    if (a[i] != b[i]) return static_cast<std::ptrdiff_t>(i);
  }
  while (i >= 4) {
    i -= 4;
    const __m256i eq = _mm256_cmpeq_epi64(load(a + i), load(b + i));
    const unsigned mask = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(eq)));
    if (mask != 0xF) {
      const unsigned diff = ~mask & 0xF;
      return static_cast<std::ptrdiff_t>(i + 31 - static_cast<std::size_t>(std::countl_zero(diff)));
    }
  }
  return -1;
}

#undef HF_AVX2

}  // namespace

const KernelTable* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  static const KernelTable table{"avx2",       or_into,    and_words, xor_words,
                                 andnot_words, any_andnot, popcount,  highest_diff};
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_kernels() { return nullptr; }

#endif

}  // namespace hf::simd
