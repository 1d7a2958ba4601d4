// AVX2 variants. This translation unit is compiled with -mavx2 and must only
// be entered after a runtime CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace mcmgr::kernels {
namespace {

// x holds values in [0, 2^31). Returns x mod p for p < 2^15. The float
// quotient is off by at most one in either direction; two compares fix it.
inline __m256i reduce_epi32(__m256i x, __m256i vp, __m256 vinv, __m256i vpm1) {
  const __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(x), vinv));
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
  r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), r), vp));
  r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, vpm1), vp));
  return r;
}

void axpy_avx2(Elem* dst, const Elem* src, Elem c, std::size_t n, std::uint32_t p) {
  if (c == 0) return;
  if (p >= kSimdCharacteristicLimit) {
    axpy_scalar(dst, src, c, n, p);
    return;
  }
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256 vinv = _mm256_set1_ps(1.0f / static_cast<float>(p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(vc, s));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce_epi32(x, vp, vinv, vpm1));
  }
  axpy_scalar(dst + i, src + i, c, n - i, p);
}

void scale_avx2(Elem* dst, Elem c, std::size_t n, std::uint32_t p) {
  if (p >= kSimdCharacteristicLimit) {
    scale_scalar(dst, c, n, p);
    return;
  }
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256 vinv = _mm256_set1_ps(1.0f / static_cast<float>(p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        reduce_epi32(_mm256_mullo_epi32(vc, d), vp, vinv, vpm1));
  }
  scale_scalar(dst + i, c, n - i, p);
}

Elem dot_avx2(const Elem* a, const Elem* b, std::size_t n, std::uint32_t p) {
  if (p >= kSimdCharacteristicLimit) return dot_scalar(a, b, n, p);
  // Products are below 2^30, so 64-bit lane sums cannot overflow at desk scale.
  __m256i even = _mm256_setzero_si256();
  __m256i odd = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    even = _mm256_add_epi64(even, _mm256_mul_epu32(va, vb));
    odd = _mm256_add_epi64(odd, _mm256_mul_epu32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_add_epi64(even, odd));
  std::uint64_t acc = (lanes[0] % p + lanes[1] % p + lanes[2] % p + lanes[3] % p) % p;
  acc += dot_scalar(a + i, b + i, n - i, p);
  return static_cast<Elem>(acc % p);
}

}  // namespace

const KernelSet* avx2_kernels_compiled() {
  static const KernelSet set{"avx2", &axpy_avx2, &scale_avx2, &dot_avx2};
  return &set;
}

}  // namespace mcmgr::kernels
