#pragma once

// The McKay correspondence on a fan of G-Hilb C^3: characters labelling
// exceptional curves, tautological bundle degrees, exceptional surfaces and
// the relations between bundles that mark them.

#include "mckay/fan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mckay {

struct EdgeLabel {
  std::array<std::size_t, 2> rays{};
  /// positive : negative is the ratio parametrizing the curve.
  Monomial positive;
  Monomial negative;
  std::size_t character = 0;
  /// Both monomials are minimal generators of the character.
  bool in_generators = true;

  std::string ratio() const { return positive.to_string() + " : " + negative.to_string(); }
};

/// Cross product of the numerators with its first nonzero entry positive,
/// scaled to the least multiple of the primitive vector whose positive and
/// negative parts share a character; those parts give the ratio.
EdgeLabel edge_label(const LatticePoint& a, const LatticePoint& b, const GroupSpec& g);

/// The marked monomial of every character on every cone.
class SupportTable {
 public:
  /// Uses the fan's tripods when present; otherwise the marked minimum at the
  /// sum of the cone's rays. Throws VerificationError on a tie.
  explicit SupportTable(const Fan3& f);
  const Monomial& marked(std::size_t cone, std::size_t character) const { return marked_.at(cone).at(character); }

 private:
  std::vector<std::vector<Monomial>> marked_;
};

/// Indices into f.edges() of the compact curves, ascending.
std::vector<std::size_t> interior_edges(const Fan3& f);

/// <C2, m1 - m2> across an interior edge with third rays C1, C2 and marked
/// monomials m1, m2; checked against <C1, m2 - m1>.
Int curve_degree(const Fan3& f, const SupportTable& s, std::size_t character, std::size_t edge);

struct BundleClass {
  std::size_t character = 0;
  /// Indexed like interior_edges(f).
  std::vector<Int> degrees;

  bool operator==(const BundleClass&) const = default;
};

BundleClass bundle_class(const Fan3& f, const SupportTable& s, std::size_t character);
/// Componentwise sum; the characters are added in the group.
BundleClass operator+(const BundleClass& a, const BundleClass& b);

struct DualBasisReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Every interior edge has degree 1 against its own label.
DualBasisReport dual_basis_check(const Fan3& f, const SupportTable& s);

enum class SurfaceKind { Hexagon, Other };

struct HexagonRelation {
  std::array<std::size_t, 3> e{};
  std::array<std::size_t, 2> f{};
  /// Characters with degree pattern (1,0,1,0,1,0), resp. (0,1,0,1,0,1), on
  /// the link curves in cyclic order.
  std::vector<std::size_t> f1_candidates;
  std::vector<std::size_t> f2_candidates;
  /// More than one (f1, f2) pair satisfies both sum checks.
  bool ambiguous = false;
};

struct SurfaceRecord {
  std::size_t vertex = 0;
  /// Neighbouring vertices in cyclic order, starting at the lowest index and
  /// continuing towards the lower of its two link neighbours.
  std::vector<std::size_t> link;
  /// link_edges[i] is the edge {vertex, link[i]}.
  std::vector<std::size_t> link_edges;
  /// star[i] is the cone {vertex, link[i], link[i+1]}.
  std::vector<std::size_t> star;
  /// Self-intersection of each link curve inside the surface.
  std::vector<int> self_intersections;
  SurfaceKind kind = SurfaceKind::Other;
  std::optional<HexagonRelation> relation;
  std::optional<Int> c2_value;
};

/// The toric surface of an interior vertex: its link cycle in L/Zv and the
/// self-intersections there; hexagon iff 6 link curves all of square -1.
/// Hexagons get their relation and its c2 value. Throws DomainError for a
/// vertex that is not interior.
SurfaceRecord surface_at_vertex(std::size_t v, const Fan3& f, const SupportTable& s);

/// e: characters of the opposite pairs of link edges (must agree); f: from
/// the alternating degree patterns, checked against e1+e2+e3 = f1+f2 in the
/// group and on bundle classes. Throws VerificationError when no pair fits.
HexagonRelation hexagon_relation(const SurfaceRecord& surf, const Fan3& f, const SupportTable& s);

/// Intersection number on the surface of the restrictions of two
/// tautological bundles.
Int surface_intersection(std::size_t a, std::size_t b, const SurfaceRecord& surf, const Fan3& f,
                         const SupportTable& s);

/// sum_{i<j} (e_i . e_j)_S - sum_{i<j} (f_i . f_j)_S. Throws DomainError
/// unless the bundle classes of e and f have equal sums.
Int c2_evaluate(const std::vector<std::size_t>& e, const std::vector<std::size_t>& fchars, const SurfaceRecord& surf,
                const Fan3& f, const SupportTable& s);

struct PairRelation {
  std::size_t i = 0, j = 0, k = 0;  ///< k = i + j
  bool bundle_additive = false;     ///< class(i) + class(j) = class(k)
  bool module_equal = false;        ///< L(i) L(j) = L(k)
};

/// Pairs i <= j for which at least one of the two tests holds.
std::vector<PairRelation> pair_relations(const Fan3& f, const SupportTable& s);

enum class Role { Trivial, EdgeLabel, HexagonF, NonActive };
std::string_view role_name(Role r);

struct TableRow {
  std::size_t character = 0;
  Role role = Role::NonActive;
  std::vector<std::size_t> edges;     ///< indices into f.edges()
  std::vector<std::size_t> hexagons;  ///< vertex indices
  std::vector<PairRelation> relations;
};

struct Correspondence {
  std::vector<EdgeLabel> labels;  ///< one per interior edge
  std::vector<BundleClass> bundles;
  std::vector<SurfaceRecord> surfaces;  ///< every interior vertex
  std::vector<PairRelation> pairs;
  std::vector<TableRow> table;
  DualBasisReport dual;
};

Correspondence mckay_correspondence(const Fan3& f);

}  // namespace mckay
