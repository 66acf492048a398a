// NEON variants for aarch64, where Advanced SIMD is part of the baseline.

#include <arm_neon.h>

#include "algser/simd/kernels.hpp"

namespace algser::simd::neon {

void scale_accumulate(std::span<std::uint64_t> acc, std::uint32_t s, std::span<const std::uint32_t> src) {
  const std::size_t n = src.size();
  const uint32x2_t sv = vdup_n_u32(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t x = vld1q_u32(src.data() + i);
    uint64x2_t a0 = vld1q_u64(acc.data() + i);
    uint64x2_t a1 = vld1q_u64(acc.data() + i + 2);
    vst1q_u64(acc.data() + i, vmlal_u32(a0, vget_low_u32(x), sv));
    vst1q_u64(acc.data() + i + 2, vmlal_u32(a1, vget_high_u32(x), sv));
  }
  const std::uint64_t w = s;
  for (; i < n; ++i) acc[i] += w * src[i];
}

std::uint64_t dot(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  const std::size_t n = a.size();
  uint64x2_t sum2 = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t x = vld1q_u32(a.data() + i);
    uint32x4_t y = vld1q_u32(b.data() + i);
    sum2 = vmlal_u32(sum2, vget_low_u32(x), vget_low_u32(y));
    sum2 = vmlal_high_u32(sum2, x, y);
  }
  std::uint64_t sum = vgetq_lane_u64(sum2, 0) + vgetq_lane_u64(sum2, 1);
  for (; i < n; ++i) sum += static_cast<std::uint64_t>(a[i]) * b[i];
  return sum;
}

}  // namespace algser::simd::neon
