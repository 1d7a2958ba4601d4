// NEON variants (AArch64). Same reduction scheme as the AVX2 path with four
// 32-bit lanes.

#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace mcmgr::kernels {
namespace {

inline uint32x4_t reduce_u32(uint32x4_t x, int32x4_t vp, float32x4_t vinv) {
  const uint32x4_t q = vcvtq_u32_f32(vmulq_f32(vcvtq_f32_u32(x), vinv));
  int32x4_t r = vsubq_s32(vreinterpretq_s32_u32(x), vmulq_s32(vreinterpretq_s32_u32(q), vp));
  r = vaddq_s32(r, vandq_s32(vreinterpretq_s32_u32(vcltzq_s32(r)), vp));
  r = vsubq_s32(r, vandq_s32(vreinterpretq_s32_u32(vcgeq_s32(r, vp)), vp));
  return vreinterpretq_u32_s32(r);
}

void axpy_neon(Elem* dst, const Elem* src, Elem c, std::size_t n, std::uint32_t p) {
  if (c == 0) return;
  if (p >= kSimdCharacteristicLimit) {
    axpy_scalar(dst, src, c, n, p);
    return;
  }
  const int32x4_t vp = vdupq_n_s32(static_cast<int>(p));
  const float32x4_t vinv = vdupq_n_f32(1.0f / static_cast<float>(p));
  const uint32x4_t vc = vdupq_n_u32(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t x = vmlaq_u32(vld1q_u32(dst + i), vc, vld1q_u32(src + i));
    vst1q_u32(dst + i, reduce_u32(x, vp, vinv));
  }
  axpy_scalar(dst + i, src + i, c, n - i, p);
}

void scale_neon(Elem* dst, Elem c, std::size_t n, std::uint32_t p) {
  if (p >= kSimdCharacteristicLimit) {
    scale_scalar(dst, c, n, p);
    return;
  }
  const int32x4_t vp = vdupq_n_s32(static_cast<int>(p));
  const float32x4_t vinv = vdupq_n_f32(1.0f / static_cast<float>(p));
  const uint32x4_t vc = vdupq_n_u32(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_u32(dst + i, reduce_u32(vmulq_u32(vc, vld1q_u32(dst + i)), vp, vinv));
  }
  scale_scalar(dst + i, c, n - i, p);
}

Elem dot_neon(const Elem* a, const Elem* b, std::size_t n, std::uint32_t p) {
  if (p >= kSimdCharacteristicLimit) return dot_scalar(a, b, n, p);
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t va = vld1q_u32(a + i);
    const uint32x4_t vb = vld1q_u32(b + i);
    acc = vmlal_u32(acc, vget_low_u32(va), vget_low_u32(vb));
    acc = vmlal_high_u32(acc, va, vb);
  }
  std::uint64_t total = (vgetq_lane_u64(acc, 0) % p + vgetq_lane_u64(acc, 1) % p) % p;
  total += dot_scalar(a + i, b + i, n - i, p);
  return static_cast<Elem>(total % p);
}

}  // namespace

const KernelSet* neon_kernels_compiled() {
  static const KernelSet set{"neon", &axpy_neon, &scale_neon, &dot_neon};
  return &set;
}

}  // namespace mcmgr::kernels
