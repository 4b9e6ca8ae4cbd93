#pragma once

// Data-parallel integer kernels used by the inner loops (support-function
// evaluation, halfspace clipping, staircase minima). Each kernel has a scalar
// reference implementation and vectorized variants; the active variant is
// chosen at runtime from the CPU features and can be overridden for testing.
//
// All variants are exact and must agree bit for bit with the scalar code.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace mckay::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// Variants compiled in and supported by this CPU; Scalar is always first.
std::vector<Isa> available_isas();
Isa active_isa();
/// Throws std::invalid_argument if the variant is unavailable.
void set_isa(Isa isa);

/// Inputs to dot3 must lie strictly inside (-kInputBound, kInputBound) so the
/// three 64-bit products cannot overflow when summed.
inline constexpr std::int64_t kInputBound = std::int64_t{1} << 30;

inline bool fits(std::int64_t v) { return v > -kInputBound && v < kInputBound; }

/// out[i] = w[0]*x[i] + w[1]*y[i] + w[2]*z[i]
void dot3(const std::int32_t* x, const std::int32_t* y, const std::int32_t* z, std::size_t n,
          const std::int32_t w[3], std::int64_t* out);

struct MinCount {
  std::int64_t min = 0;
  std::size_t count = 0;  ///< entries equal to min
  std::size_t first = 0;  ///< index of the first minimal entry
};
/// n must be positive.
MinCount min_count(const std::int64_t* v, std::size_t n);

/// Index of the first negative entry, or n if there is none.
std::size_t first_negative(const std::int64_t* v, std::size_t n);

/// dst[i] = min(dst[i], src[i])
void min_inplace(std::int32_t* dst, const std::int32_t* src, std::size_t n);

namespace detail {

struct Table {
  void (*dot3)(const std::int32_t*, const std::int32_t*, const std::int32_t*, std::size_t, const std::int32_t*,
               std::int64_t*);
  MinCount (*min_count)(const std::int64_t*, std::size_t);
  std::size_t (*first_negative)(const std::int64_t*, std::size_t);
  void (*min_inplace)(std::int32_t*, const std::int32_t*, std::size_t);
};

const Table& scalar_table();
const Table* avx2_table();  // nullptr when not compiled in
const Table* neon_table();  // nullptr when not compiled in

}  // namespace detail

}  // namespace mckay::kernels
