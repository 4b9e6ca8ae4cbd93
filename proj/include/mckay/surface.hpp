#pragma once

// Cyclic quotient surface singularities 1/r(1,q): Hirzebruch-Jung continued
// fractions, the minimal resolution as a chain of curves, cluster charts and
// the two-dimensional McKay correspondence.

#include "mckay/tripod.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mckay {

struct ContinuedFraction {
  std::int64_t r = 1;
  std::int64_t q = 1;
  /// r/q = b1 - 1/(b2 - 1/(... - 1/bk)), every bi >= 2.
  std::vector<std::int64_t> terms;

  /// Recomputes (r, q) from the terms.
  std::pair<std::int64_t, std::int64_t> evaluate() const;
};

/// Throws DomainError unless 0 < q < r and gcd(r, q) = 1.
ContinuedFraction hj_expand(std::int64_t r, std::int64_t q);

/// The group 1/r(1,q) acting on C^2.
GroupSpec surface_group(std::int64_t r, std::int64_t q);

/// Lattice points on the boundary of the convex hull of the nonzero points of
/// L = Z^2 + Z(1,q)/r in the closed quadrant, from (0,1) to (1,0).
std::vector<LatticePoint> newton_boundary(std::int64_t r, std::int64_t q);

struct SurfaceCurve {
  LatticePoint ray;
  int self_intersection = 0;
  /// The curve is parametrized by ratio_x : ratio_y, the least multiple of
  /// x^(v2/g) : y^(v1/g), g = gcd(v1, v2), with both sides of one character.
  Monomial ratio_x;
  Monomial ratio_y;
  std::size_t character = 0;
};

struct SurfaceEquation {
  Monomial lhs;
  Monomial rhs;
  std::string coeff;  ///< "λ", "μ" or "λμ"
};

/// The chart of the cone between v (nearer to (1,0)) and w.
struct SurfaceChart {
  LatticePoint v;
  LatticePoint w;
  /// x^aw = λ y^bw, y^bv = μ x^av, x^(aw-av) y^(bv-bw) = λμ.
  std::vector<SurfaceEquation> equations;

  static std::string format(const SurfaceEquation& e);
};

struct SurfaceResolution {
  std::int64_t r = 1;
  std::int64_t q = 1;
  GroupSpec group;
  ContinuedFraction fraction;
  /// From (0,1) to (1,0).
  std::vector<LatticePoint> boundary_points;
  /// In chain order starting next to (1,0).
  std::vector<SurfaceCurve> curves;
  /// One per cone, starting at the cone containing (1,0).
  std::vector<SurfaceChart> charts;
};

/// Computes the resolution from the lattice hull and cross-checks it against
/// the continued fraction; throws VerificationError on any disagreement.
SurfaceResolution resolve_surface(std::int64_t r, std::int64_t q);

/// Monomials outside the ideal of the chart's left-hand sides, sorted. Throws
/// VerificationError unless they are a transversal of the characters.
std::vector<Monomial> cluster_basis_check(const SurfaceChart& c, std::int64_t r, std::int64_t q);

/// Degree of the tautological bundle of character a on curve i, by the bend
/// of its support function across the curve's ray.
Int curve_degree_2d(const SurfaceResolution& s, std::size_t a, std::size_t i);

/// Rows: the curve characters in chain order; columns: the curves.
std::vector<std::vector<Int>> dual_degrees_2d(std::int64_t r, std::int64_t q);

/// All staircases of 1/r(1,q), sorted.
std::vector<Tripod> tripods_2d(std::int64_t r, std::int64_t q);

}  // namespace mckay
