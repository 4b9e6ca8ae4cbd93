#include "mckay/kernels.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace mckay::kernels {

namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return detail::avx2_table() != nullptr && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
      return detail::neon_table() != nullptr;  // baseline on aarch64
  }
  return false;
}

const detail::Table* table_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &detail::scalar_table();
    case Isa::Avx2:
      return detail::avx2_table();
    case Isa::Neon:
      return detail::neon_table();
  }
  return nullptr;
}

Isa best_isa() {
  if (cpu_has(Isa::Avx2)) return Isa::Avx2;
  if (cpu_has(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

struct Active {
  std::atomic<Isa> isa{best_isa()};
  std::atomic<const detail::Table*> table{table_for(best_isa())};
};

Active& active() {
  static Active a;
  return a;
}

const detail::Table& current() { return *active().table.load(std::memory_order_relaxed); }

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  for (Isa isa : {Isa::Avx2, Isa::Neon})
    if (cpu_has(isa)) out.push_back(isa);
  return out;
}

Isa active_isa() { return active().isa.load(); }

void set_isa(Isa isa) {
  if (!cpu_has(isa)) throw std::invalid_argument("kernel variant unavailable: " + std::string(isa_name(isa)));
  active().table.store(table_for(isa));
  active().isa.store(isa);
}

void dot3(const std::int32_t* x, const std::int32_t* y, const std::int32_t* z, std::size_t n,
          const std::int32_t w[3], std::int64_t* out) {
  current().dot3(x, y, z, n, w, out);
}

MinCount min_count(const std::int64_t* v, std::size_t n) {
  if (n == 0) throw std::invalid_argument("min_count of an empty range");
  return current().min_count(v, n);
}

std::size_t first_negative(const std::int64_t* v, std::size_t n) { return current().first_negative(v, n); }

void min_inplace(std::int32_t* dst, const std::int32_t* src, std::size_t n) { current().min_inplace(dst, src, n); }

}  // namespace mckay::kernels
