#include "doctest.h"
#include "mckay/kernels.hpp"

#include <random>
#include <vector>

using namespace mckay::kernels;

namespace {

struct IsaGuard {
  Isa saved = active_isa();
  ~IsaGuard() { set_isa(saved); }
};

std::vector<std::int32_t> random_i32(std::mt19937_64& rng, std::size_t n, std::int32_t bound) {
  std::uniform_int_distribution<std::int32_t> d(-bound + 1, bound - 1);
  std::vector<std::int32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar is always available and selectable") {
  IsaGuard guard;
  auto isas = available_isas();
  REQUIRE_FALSE(isas.empty());
  CHECK(isas.front() == Isa::Scalar);
  set_isa(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  MESSAGE("variants: " << isas.size());
}

TEST_CASE("every variant matches the scalar kernels") {
  IsaGuard guard;
  std::mt19937_64 rng(12345);
  const std::int32_t bound = static_cast<std::int32_t>(kInputBound);
  for (Isa isa : available_isas()) {
    CAPTURE(isa_name(isa));
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 64u, 131u}) {
      for (std::int32_t range : {3, 1000, bound}) {
        auto x = random_i32(rng, n, range), y = random_i32(rng, n, range), z = random_i32(rng, n, range);
        auto wv = random_i32(rng, 3, range);
        std::int32_t w[3] = {wv[0], wv[1], wv[2]};

        std::vector<std::int64_t> ref(n), got(n);
        detail::scalar_table().dot3(x.data(), y.data(), z.data(), n, w, ref.data());
        set_isa(isa);
        dot3(x.data(), y.data(), z.data(), n, w, got.data());
        CHECK(ref == got);

        auto mref = detail::scalar_table().min_count(ref.data(), n);
        auto mgot = min_count(ref.data(), n);
        CHECK(mref.min == mgot.min);
        CHECK(mref.count == mgot.count);
        CHECK(mref.first == mgot.first);

        CHECK(detail::scalar_table().first_negative(ref.data(), n) == first_negative(ref.data(), n));

        auto dref = x, dgot = x;
        detail::scalar_table().min_inplace(dref.data(), y.data(), n);
        min_inplace(dgot.data(), y.data(), n);
        CHECK(dref == dgot);
      }
    }
  }
}

TEST_CASE("ties and extreme values") {
  IsaGuard guard;
  for (Isa isa : available_isas()) {
    set_isa(isa);
    std::vector<std::int64_t> v{5, 2, 9, 2, 2, 7, 2, 11, 3};
    auto mc = min_count(v.data(), v.size());
    CHECK(mc.min == 2);
    CHECK(mc.count == 4);
    CHECK(mc.first == 1);

    std::vector<std::int64_t> big{INT64_MAX, INT64_MIN + 1, INT64_MAX, INT64_MIN + 1, 0};
    auto mb = min_count(big.data(), big.size());
    CHECK(mb.min == INT64_MIN + 1);
    CHECK(mb.count == 2);
    CHECK(mb.first == 1);

    std::vector<std::int64_t> pos{0, 1, 2, 3, 4, 5, 6, 7, -1};
    CHECK(first_negative(pos.data(), pos.size()) == 8);
    CHECK(first_negative(pos.data(), 8) == 8);

    std::int32_t w[3] = {(1 << 30) - 1, -((1 << 30) - 1), (1 << 30) - 1};
    std::vector<std::int32_t> a(5, (1 << 30) - 1), b(5, -((1 << 30) - 1));
    std::vector<std::int64_t> out(5);
    dot3(a.data(), b.data(), a.data(), 5, w, out.data());
    const std::int64_t m = (std::int64_t{1} << 30) - 1;
    for (auto o : out) CHECK(o == 3 * m * m);
  }
  CHECK_THROWS(min_count(nullptr, 0));
}
