#include "rewb/simd/bitset_kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace rewb::simd {
namespace {

void or_into_neon(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

bool intersects_neon(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t x = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vmaxvq_u32(vreinterpretq_u32_u64(x))) return true;
  }
  for (; i < n; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

bool any_neon(const Word* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    if (vmaxvq_u32(vreinterpretq_u32_u64(vld1q_u64(a + i)))) return true;
  }
  for (; i < n; ++i) {
    if (a[i]) return true;
  }
  return false;
}

constexpr BitsetKernels kNeon{"neon", or_into_neon, intersects_neon, any_neon};

}  // namespace

const BitsetKernels* neon_kernels() { return &kNeon; }

}  // namespace rewb::simd

#else

namespace rewb::simd {
const BitsetKernels* neon_kernels() { return nullptr; }
}  // namespace rewb::simd

#endif
