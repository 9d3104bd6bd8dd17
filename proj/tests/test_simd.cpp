#include <doctest.h>

#include <random>
#include <vector>

#include "hf/code.hpp"
#include "hf/simd/kernels.hpp"

using namespace hf::simd;

namespace {

std::vector<const KernelTable*> vector_tables() {
  std::vector<const KernelTable*> out;
  if (const auto* t = avx2_kernels()) out.push_back(t);
  if (const auto* t = neon_kernels()) out.push_back(t);
  return out;
}

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<Word> v(n);
  for (auto& w : v) {
    w = rng();
    for (int i = 0; i < density; ++i) w &= rng();
  }
  return v;
}

}  // namespace

TEST_SUITE("simd") {
  TEST_CASE("vector kernels match the scalar reference") {
    const KernelTable& ref = scalar_kernels();
    std::mt19937_64 rng(12345);
    for (const KernelTable* t : vector_tables()) {
      CAPTURE(t->name);
      // Lengths straddle the 4-word vector width and its tails.
      for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 33u, 64u, 257u, 1024u}) {
        for (int density = 0; density < 3; ++density) {
          const auto a = random_words(rng, n, density);
          auto b = random_words(rng, n, density);
          if (n > 2 && density == 2) b = a;  // equal inputs exercise highest_diff = -1
          std::vector<Word> d1(n), d2(n);

          d1 = a;
          d2 = a;
          ref.or_into(d1.data(), b.data(), n);
          t->or_into(d2.data(), b.data(), n);
          CHECK(d1 == d2);

          ref.and_words(d1.data(), a.data(), b.data(), n);
          t->and_words(d2.data(), a.data(), b.data(), n);
          CHECK(d1 == d2);

          ref.xor_words(d1.data(), a.data(), b.data(), n);
          t->xor_words(d2.data(), a.data(), b.data(), n);
          CHECK(d1 == d2);

          ref.andnot_words(d1.data(), a.data(), b.data(), n);
          t->andnot_words(d2.data(), a.data(), b.data(), n);
          CHECK(d1 == d2);

          CHECK(ref.any_andnot(a.data(), b.data(), n) == t->any_andnot(a.data(), b.data(), n));
          CHECK(ref.popcount(a.data(), n) == t->popcount(a.data(), n));
          CHECK(ref.highest_diff(a.data(), b.data(), n) == t->highest_diff(a.data(), b.data(), n));
        }
      }
    }
  }

  TEST_CASE("scalar reference against per-bit definitions") {
    const KernelTable& ref = scalar_kernels();
    std::mt19937_64 rng(7);
    for (std::size_t n : {1u, 3u, 9u}) {
      const auto a = random_words(rng, n, 1);
      auto b = a;
      b[n / 2] ^= Word{1} << 17;
      std::size_t pc = 0;
      for (Word w : a)
        for (int i = 0; i < 64; ++i) pc += (w >> i) & 1U;
      CHECK(ref.popcount(a.data(), n) == pc);
      CHECK(ref.highest_diff(a.data(), b.data(), n) == static_cast<std::ptrdiff_t>(n / 2));
      CHECK(ref.highest_diff(a.data(), a.data(), n) == -1);
      CHECK_FALSE(ref.any_andnot(a.data(), a.data(), n));
    }
  }

  TEST_CASE("active table is a known one") {
    const KernelTable& k = active_kernels();
    CHECK((k.name == scalar_kernels().name || (avx2_kernels() && k.name == avx2_kernels()->name) ||
           (neon_kernels() && k.name == neon_kernels()->name)));
  }
}
