#include "rewb/simd/bitset_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace rewb::simd {
namespace {

#define REWB_AVX2 __attribute__((target("avx2")))

REWB_AVX2 void or_into_avx2(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

REWB_AVX2 bool intersects_avx2(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (!_mm256_testz_si256(x, y)) return true;
  }
  for (; i < n; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

REWB_AVX2 bool any_avx2(const Word* a, std::size_t n) {
  std::size_t i = 0;
  // Two registers per iteration keeps the summary-matrix scan load-bound.
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i + 4));
    __m256i o = _mm256_or_si256(x, y);
    if (!_mm256_testz_si256(o, o)) return true;
  }
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    if (!_mm256_testz_si256(x, x)) return true;
  }
  for (; i < n; ++i) {
    if (a[i]) return true;
  }
  return false;
}

#undef REWB_AVX2

constexpr BitsetKernels kAvx2{"avx2", or_into_avx2, intersects_avx2, any_avx2};

}  // namespace

const BitsetKernels* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace rewb::simd

#else

namespace rewb::simd {
const BitsetKernels* avx2_kernels() { return nullptr; }
}  // namespace rewb::simd

#endif
