#include "mckay/kernels.hpp"

namespace mckay::kernels::detail {

namespace {

void dot3_scalar(const std::int32_t* x, const std::int32_t* y, const std::int32_t* z, std::size_t n,
                 const std::int32_t* w, std::int64_t* out) {
  const std::int64_t w0 = w[0], w1 = w[1], w2 = w[2];
  for (std::size_t i = 0; i < n; ++i) out[i] = w0 * x[i] + w1 * y[i] + w2 * z[i];
}

MinCount min_count_scalar(const std::int64_t* v, std::size_t n) {
  MinCount mc{v[0], 1, 0};
  for (std::size_t i = 1; i < n; ++i) {
    if (v[i] < mc.min) {
      mc = {v[i], 1, i};
    } else if (v[i] == mc.min) {
      ++mc.count;
    }
  }
  return mc;
}

std::size_t first_negative_scalar(const std::int64_t* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] < 0) return i;
  return n;
}

void min_inplace_scalar(std::int32_t* dst, const std::int32_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (src[i] < dst[i]) dst[i] = src[i];
}

}  // namespace

const Table& scalar_table() {
  static const Table t{dot3_scalar, min_count_scalar, first_negative_scalar, min_inplace_scalar};
  return t;
}

}  // namespace mckay::kernels::detail
