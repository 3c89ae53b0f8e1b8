#if defined(__aarch64__) || defined(__ARM_NEON)
#include <arm_neon.h>

#include "scalars/kernels.hpp"

namespace scalars::kernels {

namespace {

inline uint32x4_t barrett(uint32x4_t x, uint32_t m, uint32x4_t vp) {
  uint64x2_t lo = vmull_n_u32(vget_low_u32(x), m);
  uint64x2_t hi = vmull_n_u32(vget_high_u32(x), m);
  uint32x4_t q = vcombine_u32(vshrn_n_u64(lo, 32), vshrn_n_u64(hi, 32));
  uint32x4_t r = vmlsq_u32(x, q, vp);
  uint32x4_t over = vcgeq_u32(r, vp);
  return vsubq_u32(r, vandq_u32(over, vp));
}

}  // namespace

void axpy_neon(uint32_t* dst, const uint32_t* src, uint32_t c, uint32_t p, size_t n) {
  const uint32_t m = static_cast<uint32_t>((uint64_t{1} << 32) / p);
  const uint32x4_t vp = vdupq_n_u32(p);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t x = vmlaq_n_u32(vld1q_u32(dst + i), vld1q_u32(src + i), c);
    vst1q_u32(dst + i, barrett(x, m, vp));
  }
  if (i < n) axpy_scalar(dst + i, src + i, c, p, n - i);
}

void scale_neon(uint32_t* dst, uint32_t c, uint32_t p, size_t n) {
  const uint32_t m = static_cast<uint32_t>((uint64_t{1} << 32) / p);
  const uint32x4_t vp = vdupq_n_u32(p);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) vst1q_u32(dst + i, barrett(vmulq_n_u32(vld1q_u32(dst + i), c), m, vp));
  if (i < n) scale_scalar(dst + i, c, p, n - i);
}

}  // namespace scalars::kernels
#endif
