#include "hf/simd/kernels.hpp"

#include <bit>

namespace hf::simd {
namespace {

void or_into(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void and_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void xor_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void andnot_words(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

bool any_andnot(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & ~b[i]) return true;
  return false;
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::ptrdiff_t highest_diff(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar",  or_into,    and_words, xor_words,
                                 andnot_words, any_andnot, popcount,  highest_diff};
  return table;
}

}  // namespace hf::simd
