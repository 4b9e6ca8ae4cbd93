#pragma once

// Exact convex polygons in the cross-section {v >= 0, v1+v2+v3 = 1} of the
// positive octant. Points are stored as primitive integer rays, so clipping by
// a homogeneous halfspace <h, v> >= 0 never leaves the integers. A 2D cone is
// the same thing with third coordinate 0 (a segment of the section).

#include "mckay/arith.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace mckay::section {

using Vec = std::array<Int, 3>;

Vec normalize(Vec v);  // divides by the content; zero stays zero
Int dot(const Vec& a, const Vec& b);
Vec cross(const Vec& a, const Vec& b);
Int det(const Vec& a, const Vec& b, const Vec& c);
/// Section area of the triangle (a, b, c) relative to the whole section,
/// |det| / (s(a) s(b) s(c)) with s the coordinate sum.
Rational section_area(const Vec& a, const Vec& b, const Vec& c);

/// Vertices in cyclic order; may degenerate to a segment, a point or nothing.
struct Polygon {
  std::vector<Vec> v;
  bool empty() const { return v.empty(); }
};

/// The full section: the triangle e1, e2, e3 (n = 3) or the segment e1, e2 (n = 2).
Polygon full_section(int n);
/// The section of the cone spanned by the given rays (2 or 3 of them).
Polygon from_rays(const std::vector<Vec>& rays);

/// Keeps the part with <h, v> >= 0.
void clip(Polygon& p, const Vec& h);

/// Removes repeated and collinear vertices.
std::vector<Vec> corners(const Polygon& p);

/// A fixed family of halfspaces <h_i, v> >= 0 with small integer normals,
/// stored as columns for the dot-product kernel when they fit.
class HalfspaceSet {
 public:
  void add(const Vec& h);
  std::size_t size() const { return normals_.size(); }
  const Vec& operator[](std::size_t i) const { return normals_[i]; }

  /// Index of some halfspace that the point violates (<h, v> < 0), or size().
  std::size_t first_violated(const Vec& v) const;

  /// The polygon intersected with every halfspace. Only halfspaces violated
  /// by a current vertex are applied, one at a time.
  Polygon intersect(Polygon p) const;

 private:
  std::vector<Vec> normals_;
  std::vector<std::int32_t> hx_, hy_, hz_;
  bool small_ = true;
  mutable std::vector<std::int64_t> scratch_;
};

}  // namespace mckay::section
