#include "mckay/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

#include <algorithm>

namespace mckay::kernels::detail {

namespace {

void dot3_neon(const std::int32_t* x, const std::int32_t* y, const std::int32_t* z, std::size_t n,
               const std::int32_t* w, std::int64_t* out) {
  const int32x2_t w0 = vdup_n_s32(w[0]);
  const int32x2_t w1 = vdup_n_s32(w[1]);
  const int32x2_t w2 = vdup_n_s32(w[2]);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    int64x2_t acc = vmull_s32(vld1_s32(x + i), w0);
    acc = vmlal_s32(acc, vld1_s32(y + i), w1);
    acc = vmlal_s32(acc, vld1_s32(z + i), w2);
    vst1q_s64(out + i, acc);
  }
  const std::int64_t s0 = w[0], s1 = w[1], s2 = w[2];
  for (; i < n; ++i) out[i] = s0 * x[i] + s1 * y[i] + s2 * z[i];
}

MinCount min_count_neon(const std::int64_t* v, std::size_t n) {
  std::int64_t best = v[0];
  std::size_t i = 0;
  if (n >= 2) {
    int64x2_t m = vld1q_s64(v);
    for (i = 2; i + 2 <= n; i += 2) {
      int64x2_t cur = vld1q_s64(v + i);
      m = vbslq_s64(vcgtq_s64(m, cur), cur, m);
    }
    best = std::min(vgetq_lane_s64(m, 0), vgetq_lane_s64(m, 1));
  }
  for (; i < n; ++i)
    if (v[i] < best) best = v[i];
  MinCount mc{best, 0, n};
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j] == best) {
      if (mc.first == n) mc.first = j;
      ++mc.count;
    }
  }
  return mc;
}

std::size_t first_negative_neon(const std::int64_t* v, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t neg = vcltzq_s64(vld1q_s64(v + i));
    if (vgetq_lane_u64(neg, 0)) return i;
    if (vgetq_lane_u64(neg, 1)) return i + 1;
  }
  for (; i < n; ++i)
    if (v[i] < 0) return i;
  return n;
}

void min_inplace_neon(std::int32_t* dst, const std::int32_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) vst1q_s32(dst + i, vminq_s32(vld1q_s32(dst + i), vld1q_s32(src + i)));
  for (; i < n; ++i)
    if (src[i] < dst[i]) dst[i] = src[i];
}

}  // namespace

const Table* neon_table() {
  static const Table t{dot3_neon, min_count_neon, first_negative_neon, min_inplace_neon};
  return &t;
}

}  // namespace mckay::kernels::detail

#else

namespace mckay::kernels::detail {
const Table* neon_table() { return nullptr; }
}  // namespace mckay::kernels::detail

#endif
