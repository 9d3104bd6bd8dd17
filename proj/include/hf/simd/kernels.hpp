#pragma once

// Word-array kernels behind Code's bitwise operations. Every entry has a
// scalar reference implementation; vector variants (AVX2 on x86-64, NEON on
// AArch64) are selected once at runtime and must agree with the scalar ones
// bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace hf::simd {

using Word = std::uint64_t;

struct KernelTable {
  std::string_view name;
  // dst[i] |= src[i]
  void (*or_into)(Word* dst, const Word* src, std::size_t n);
  // dst[i] = a[i] & b[i]
  void (*and_words)(Word* dst, const Word* a, const Word* b, std::size_t n);
  // dst[i] = a[i] ^ b[i]
  void (*xor_words)(Word* dst, const Word* a, const Word* b, std::size_t n);
  // dst[i] = a[i] & ~b[i]
  void (*andnot_words)(Word* dst, const Word* a, const Word* b, std::size_t n);
  // true iff some a[i] & ~b[i] is nonzero (a is not a sub-mask of b)
  bool (*any_andnot)(const Word* a, const Word* b, std::size_t n);
  std::size_t (*popcount)(const Word* a, std::size_t n);
  // Index of the highest word where a and b differ, or -1 when equal.
  std::ptrdiff_t (*highest_diff)(const Word* a, const Word* b, std::size_t n);
};

const KernelTable& scalar_kernels();
// nullptr when the CPU or the build lacks the instruction set.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

// The table used by Code. Chosen on first call; the environment variable
// HF_SIMD=scalar forces the reference path.
const KernelTable& active_kernels();

}  // namespace hf::simd
