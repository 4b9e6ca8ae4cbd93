// Compiled with -mavx2; only reached after a runtime CPU check.

#include "mckay/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace mckay::kernels::detail {

namespace {

void dot3_avx2(const std::int32_t* x, const std::int32_t* y, const std::int32_t* z, std::size_t n,
               const std::int32_t* w, std::int64_t* out) {
  const __m256i w0 = _mm256_set1_epi64x(w[0]);
  const __m256i w1 = _mm256_set1_epi64x(w[1]);
  const __m256i w2 = _mm256_set1_epi64x(w[2]);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // Sign-extend 4 lanes to 64 bits; _mm256_mul_epi32 multiplies the low
    // signed 32 bits of each 64-bit lane.
    __m256i vx = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i)));
    __m256i vy = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i)));
    __m256i vz = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(z + i)));
    __m256i acc = _mm256_mul_epi32(vx, w0);
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(vy, w1));
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(vz, w2));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  const std::int64_t s0 = w[0], s1 = w[1], s2 = w[2];
  for (; i < n; ++i) out[i] = s0 * x[i] + s1 * y[i] + s2 * z[i];
}

MinCount min_count_avx2(const std::int64_t* v, std::size_t n) {
  std::int64_t best = v[0];
  std::size_t i = 0;
  if (n >= 4) {
    __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v));
    for (i = 4; i + 4 <= n; i += 4) {
      __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
      m = _mm256_blendv_epi8(m, cur, _mm256_cmpgt_epi64(m, cur));
    }
    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), m);
    best = lanes[0];
    for (int k = 1; k < 4; ++k)
      if (lanes[k] < best) best = lanes[k];
  }
  for (; i < n; ++i)
    if (v[i] < best) best = v[i];

  MinCount mc{best, 0, n};
  const __m256i target = _mm256_set1_epi64x(best);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + j));
    int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(cur, target)));
    if (mask) {
      if (mc.first == n) mc.first = j + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
      mc.count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
    }
  }
  for (; j < n; ++j) {
    if (v[j] == best) {
      if (mc.first == n) mc.first = j;
      ++mc.count;
    }
  }
  return mc;
}

std::size_t first_negative_avx2(const std::int64_t* v, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(zero, cur)));
    if (mask) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i)
    if (v[i] < 0) return i;
  return n;
}

void min_inplace_avx2(std::int32_t* dst, const std::int32_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_min_epi32(a, b));
  }
  for (; i < n; ++i)
    if (src[i] < dst[i]) dst[i] = src[i];
}

}  // namespace

const Table* avx2_table() {
  static const Table t{dot3_avx2, min_count_avx2, first_negative_avx2, min_inplace_avx2};
  return &t;
}

}  // namespace mckay::kernels::detail

#else

namespace mckay::kernels::detail {
const Table* avx2_table() { return nullptr; }
}  // namespace mckay::kernels::detail

#endif
