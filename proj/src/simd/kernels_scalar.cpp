#include "rewb/simd/bitset_kernels.hpp"

namespace rewb::simd {
namespace {

void or_into_scalar(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

bool intersects_scalar(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

bool any_scalar(const Word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i]) return true;
  }
  return false;
}

constexpr BitsetKernels kScalar{"scalar", or_into_scalar, intersects_scalar, any_scalar};

}  // namespace

const BitsetKernels& scalar_kernels() { return kScalar; }

}  // namespace rewb::simd
