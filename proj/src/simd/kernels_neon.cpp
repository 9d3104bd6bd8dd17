#include "hf/simd/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#define HF_HAVE_NEON 1
#include <arm_neon.h>

#include <bit>
#endif

namespace hf::simd {

#if HF_HAVE_NEON
namespace {

void or_into(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] |= src[i];
}

void and_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void xor_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}

// vbicq_u64(x, y) computes x & ~y.
void andnot_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

bool any_andnot(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t v = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if ((vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0) return true;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return true;
  return false;
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a + i)));
    total += vaddvq_u8(bytes);
  }
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::ptrdiff_t highest_diff(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = n;
  if (i % 2 != 0) {
    --i;
    if (a[i] != b[i]) return static_cast<std::ptrdiff_t>(i);
  }
  while (i >= 2) {
    i -= 2;
    const uint64x2_t eq = vceqq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vgetq_lane_u64(eq, 1) == 0) return static_cast<std::ptrdiff_t>(i + 1);
    if (vgetq_lane_u64(eq, 0) == 0) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

}  // namespace

const KernelTable* neon_kernels() {
  static const KernelTable table{"neon",       or_into,    and_words, xor_words,
                                 andnot_words, any_andnot, popcount,  highest_diff};
  return &table;
}

#else

const KernelTable* neon_kernels() { return nullptr; }

#endif

}  // namespace hf::simd
