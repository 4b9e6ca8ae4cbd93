#pragma once

// The toric fan of G-Hilb C^3 assembled from tripod cones, its verification,
// Nakamura charts and wall crossing.

#include "mckay/tripod.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace mckay {

/// Rays of the cone of a tripod (n of them, sorted). Throws VerificationError
/// if the cone is not full-dimensional or not simplicial.
std::vector<LatticePoint> cone_of_tripod(const Tripod& t, const GroupSpec& g,
                                         const std::vector<CharacterModule>& modules);
std::vector<LatticePoint> cone_of_tripod(const Tripod& t, const GroupSpec& g);

struct FanEdge {
  std::array<std::size_t, 2> rays{};  ///< vertex indices, ascending
  std::vector<std::size_t> cones;     ///< adjacent cone indices, ascending
  bool interior = false;              ///< not contained in a coordinate plane
};

struct FanCheck {
  std::string name;
  bool passed = true;
  bool warning_only = false;  ///< assumption-dependent checks on non-SL groups
  std::vector<std::string> failures;
};

struct FanReport {
  std::vector<FanCheck> checks;
  bool ok() const;
  std::string to_string() const;
};

struct FanOptions {
  std::size_t max_order = 200;
  unsigned threads = 1;
  /// Build and return the fan even when a check fails.
  bool allow_failures = false;
};

class Fan3 {
 public:
  const GroupSpec& group() const { return group_; }
  const std::vector<CharacterModule>& modules() const { return modules_; }

  /// Deduplicated rays, sorted.
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  /// Ascending vertex indices per cone; cones sorted.
  const std::vector<std::array<std::size_t, 3>>& cones() const { return cones_; }
  /// The tripod whose cone is cones()[i].
  const std::vector<Tripod>& tripods() const { return tripods_; }
  const std::vector<FanEdge>& edges() const { return edges_; }
  const FanReport& report() const { return report_; }

  std::optional<std::size_t> vertex_index(const LatticePoint& p) const;
  std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> cone_of(const Tripod& t) const;
  /// Cones containing the vertex, ascending.
  std::vector<std::size_t> star(std::size_t vertex) const;
  /// The third ray of a cone containing the edge.
  std::size_t opposite(std::size_t cone, const FanEdge& e) const;
  bool is_interior_vertex(std::size_t v) const { return vertices_.at(v).is_interior(); }

 private:
  friend Fan3 build_fan(const GroupSpec&, const FanOptions&);
  friend Fan3 fan_from_parts(const GroupSpec&, std::vector<LatticePoint>, std::vector<std::array<std::size_t, 3>>,
                             std::vector<Tripod>);
  void index_edges();

  GroupSpec group_;
  std::vector<CharacterModule> modules_;
  std::vector<LatticePoint> vertices_;
  std::vector<std::array<std::size_t, 3>> cones_;
  std::vector<Tripod> tripods_;
  std::vector<FanEdge> edges_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_lookup_;
  FanReport report_;
};

/// Enumerates tripods, computes their cones and verifies the result: cone
/// count = |G|, pairwise face-to-face, coverage of the junior simplex, rays
/// primitive, non-coordinate rays junior, cones basic, edge adjacency. Throws
/// VerificationError carrying the report unless allow_failures is set.
Fan3 build_fan(const GroupSpec& g, const FanOptions& opts = {});

/// A fan from explicit data (e.g. parsed JSON); tripods may be empty.
Fan3 fan_from_parts(const GroupSpec& g, std::vector<LatticePoint> vertices,
                    std::vector<std::array<std::size_t, 3>> cones, std::vector<Tripod> tripods);

/// Runs the structural checks on any fan.
FanReport verify_fan(const Fan3& f);

/// Interior vertices whose star has exactly 6 cones and 6 interior edges and
/// whose link is a regular hexagon (u + u' on the ray of v for opposite
/// neighbours), i.e. compact surfaces isomorphic to the degree 6 del Pezzo.
std::vector<std::size_t> hexagon_census(const Fan3& f);

/// The tripod of the cone across the wall {a, b} of the cone of t.
/// Throws DomainError for a boundary wall.
Tripod wall_cross(const Tripod& t, const LatticePoint& a, const LatticePoint& b, const Fan3& f);

// Nakamura charts.

enum class Orientation { Up, Down, Degenerate };
std::string_view orientation_name(Orientation o);

/// lhs = coeff * rhs, where coeff is a monomial in the three chart
/// coordinates dual to the cone rays (exponents in cone ray order).
struct ChartEquation {
  Monomial lhs;
  Monomial rhs;
  std::array<Int, 3> coeff{};
  std::string coeff_name;  ///< e.g. "λμ"; empty for degenerate charts
};

struct Chart {
  Orientation orientation = Orientation::Degenerate;
  std::array<int, 6> params{};  ///< (a, b, c, d, e, f) for up/down charts
  std::vector<ChartEquation> equations;
  std::vector<LatticePoint> rays;  ///< the cone rays the coefficients refer to

  /// "x^4 = λ y^2 z"
  static std::string format(const ChartEquation& e);
};

/// Generators of the cluster ideal (corners of the basis) with their
/// equations, classified as up, down or degenerate.
Chart chart_of_tripod(const Tripod& t, const GroupSpec& g, const std::vector<LatticePoint>& rays);
/// Builds the chart of an up/down chart from its parameters alone.
Chart chart_from_params(Orientation o, const std::array<int, 6>& params);

/// Rays from the 2x2 minors of the exponent matrix of the first (up) or
/// second (down) triple of equations, as primitive points of L.
std::array<LatticePoint, 3> vertices_from_chart(const Chart& c, const GroupSpec& g);

}  // namespace mckay
