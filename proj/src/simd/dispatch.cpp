#include <cstdlib>
#include <string_view>

#include "hf/simd/kernels.hpp"

namespace hf::simd {

const KernelTable& active_kernels() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    if (const char* forced = std::getenv("HF_SIMD"); forced && std::string_view(forced) == "scalar")
      return scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return *t;
    if (const KernelTable* t = neon_kernels()) return *t;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace hf::simd
