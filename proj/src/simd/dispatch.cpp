#include <cstdlib>
#include <string_view>

#include "rewb/simd/bitset_kernels.hpp"

namespace rewb::simd {
namespace {

const BitsetKernels& select() {
  const BitsetKernels* best = avx2_kernels();
  if (!best) best = neon_kernels();
  if (!best) best = &scalar_kernels();

  if (const char* env = std::getenv("REWB_SIMD")) {
    std::string_view want(env);
    for (const BitsetKernels* k : available_kernels()) {
      if (want == k->name) return *k;
    }
  }
  return *best;
}

}  // namespace

std::vector<const BitsetKernels*> available_kernels() {
  std::vector<const BitsetKernels*> out{&scalar_kernels()};
  if (const auto* k = avx2_kernels()) out.push_back(k);
  if (const auto* k = neon_kernels()) out.push_back(k);
  return out;
}

const BitsetKernels& active_kernels() {
  static const BitsetKernels& chosen = select();
  return chosen;
}

}  // namespace rewb::simd
