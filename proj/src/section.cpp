#include "mckay/section.hpp"

#include "mckay/kernels.hpp"

namespace mckay::section {

Vec normalize(Vec v) {
  Int c = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]));
  if (c > 1)
    for (auto& x : v) x /= c;
  return v;
}

Int dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Int det(const Vec& a, const Vec& b, const Vec& c) { return dot(a, cross(b, c)); }

Rational section_area(const Vec& a, const Vec& b, const Vec& c) {
  auto s = [](const Vec& v) { return Int(v[0] + v[1] + v[2]); };
  return Rational(abs(det(a, b, c)), s(a) * s(b) * s(c));
}

Polygon full_section(int n) {
  if (n == 2) return Polygon{{Vec{1, 0, 0}, Vec{0, 1, 0}}};
  return Polygon{{Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}}};
}

Polygon from_rays(const std::vector<Vec>& rays) {
  Polygon p;
  for (const auto& r : rays) p.v.push_back(normalize(r));
  return p;
}

void clip(Polygon& p, const Vec& h) {
  const std::size_t n = p.v.size();
  if (n == 0) return;
  std::vector<Int> s(n);
  bool any_neg = false;
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = dot(h, p.v[i]);
    any_neg |= s[i] < 0;
  }
  if (!any_neg) return;
  if (n == 1) {
    p.v.clear();
    return;
  }
  std::vector<Vec> out;
  // A segment is walked as p0 -> p1 only; closing it back would add the
  // crossing point twice.
  const std::size_t edges = n == 2 ? 1 : n;
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] >= 0) out.push_back(p.v[i]);
    if (i >= edges) continue;
    std::size_t j = (i + 1) % n;
    if ((s[i] > 0 && s[j] < 0) || (s[i] < 0 && s[j] > 0)) {
      // s_i * v_j - s_j * v_i lies on the plane and between the two points.
      Vec q;
      for (int k = 0; k < 3; ++k) q[k] = s[i] * p.v[j][k] - s[j] * p.v[i][k];
      if (s[i] < 0)
        for (auto& x : q) x = -x;
      out.push_back(normalize(q));
    }
  }
  p.v = std::move(out);
  p.v = corners(p);
}

std::vector<Vec> corners(const Polygon& p) {
  std::vector<Vec> v;
  for (const auto& x : p.v)
    if (v.empty() || v.back() != x) v.push_back(x);
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();
  bool changed = true;
  while (changed && v.size() > 2) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& a = v[(i + v.size() - 1) % v.size()];
      const auto& c = v[(i + 1) % v.size()];
      if (det(a, v[i], c) == 0) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return v;
}

void HalfspaceSet::add(const Vec& h) {
  normals_.push_back(h);
  if (!small_) return;
  for (const auto& x : h) {
    if (x >= kernels::kInputBound || x <= -kernels::kInputBound) {
      small_ = false;
      hx_.clear();
      hy_.clear();
      hz_.clear();
      return;
    }
  }
  hx_.push_back(static_cast<std::int32_t>(h[0]));
  hy_.push_back(static_cast<std::int32_t>(h[1]));
  hz_.push_back(static_cast<std::int32_t>(h[2]));
}

std::size_t HalfspaceSet::first_violated(const Vec& v) const {
  const std::size_t n = normals_.size();
  if (n == 0) return 0;
  bool fits = small_;
  for (const auto& x : v) fits = fits && x < kernels::kInputBound && x > -kernels::kInputBound;
  if (fits) {
    std::int32_t w[3] = {static_cast<std::int32_t>(v[0]), static_cast<std::int32_t>(v[1]),
                         static_cast<std::int32_t>(v[2])};
    scratch_.resize(n);
    kernels::dot3(hx_.data(), hy_.data(), hz_.data(), n, w, scratch_.data());
    return kernels::first_negative(scratch_.data(), n);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (dot(normals_[i], v) < 0) return i;
  return n;
}

Polygon HalfspaceSet::intersect(Polygon p) const {
  for (;;) {
    std::size_t hit = size();
    for (const auto& v : p.v) {
      hit = first_violated(v);
      if (hit < size()) break;
    }
    if (hit >= size()) return p;
    clip(p, normals_[hit]);
    if (p.empty()) return p;
  }
}

}  // namespace mckay::section
