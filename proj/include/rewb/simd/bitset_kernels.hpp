#pragma once

// Word-array kernels behind StateSet and SummaryVector.
//
// Every variant implements the same three primitives over arrays of 64-bit
// words. The scalar table is the reference; vector tables must agree with
// it bit for bit (tests/test_kernels.cpp). The active table is picked once
// from the running CPU; REWB_SIMD=scalar|avx2|neon in the environment
// overrides the choice when the requested variant is available.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rewb::simd {

using Word = std::uint64_t;

struct BitsetKernels {
  const char* name;
  // dst[i] |= src[i]
  void (*or_into)(Word* dst, const Word* src, std::size_t n);
  // any(a[i] & b[i])
  bool (*intersects)(const Word* a, const Word* b, std::size_t n);
  // any(a[i])
  bool (*any)(const Word* a, std::size_t n);
};

const BitsetKernels& scalar_kernels();

/// nullptr when not compiled for this target or unsupported by the CPU.
const BitsetKernels* avx2_kernels();
const BitsetKernels* neon_kernels();

/// Every variant usable on this machine, scalar first.
std::vector<const BitsetKernels*> available_kernels();

const BitsetKernels& active_kernels();

inline void or_into(std::span<Word> dst, std::span<const Word> src) {
  active_kernels().or_into(dst.data(), src.data(), dst.size());
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  return active_kernels().intersects(a.data(), b.data(), a.size());
}

inline bool any(std::span<const Word> a) { return active_kernels().any(a.data(), a.size()); }

}  // namespace rewb::simd
