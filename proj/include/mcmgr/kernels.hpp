#pragma once

// Modular vector kernels for the row-reduction inner loops.
//
// Every variant computes bit-identical results: entries are reduced
// representatives in [0, p). The SIMD variants handle characteristics below
// kSimdCharacteristicLimit in vector registers and defer to the scalar code
// otherwise, so any variant may be called with any prime.

#include <cstddef>
#include <cstdint>

#include "mcmgr/field.hpp"

namespace mcmgr::kernels {

/// SIMD paths keep c * x + y below 2^31 in 32-bit lanes.
inline constexpr std::uint32_t kSimdCharacteristicLimit = 1u << 15;

/// dst[i] = (dst[i] + c * src[i]) mod p
using AxpyFn = void (*)(Elem* dst, const Elem* src, Elem c, std::size_t n, std::uint32_t p);
/// dst[i] = (c * dst[i]) mod p
using ScaleFn = void (*)(Elem* dst, Elem c, std::size_t n, std::uint32_t p);
/// sum_i a[i] * b[i] mod p
using DotFn = Elem (*)(const Elem* a, const Elem* b, std::size_t n, std::uint32_t p);

struct KernelSet {
  const char* name;
  AxpyFn axpy;
  ScaleFn scale;
  DotFn dot;
};

const KernelSet& scalar_kernels();

/// nullptr when the variant is not compiled in or the CPU lacks the feature.
const KernelSet* avx2_kernels();
const KernelSet* neon_kernels();

/// The kernel set used by linalg. Picks the widest supported variant once;
/// MCMGR_KERNELS=scalar in the environment pins the reference path.
const KernelSet& active_kernels();

/// Overrides the active set (tests and benchmarks). Not thread-safe against
/// concurrent linalg calls.
void set_active_kernels(const KernelSet& set);

}  // namespace mcmgr::kernels
