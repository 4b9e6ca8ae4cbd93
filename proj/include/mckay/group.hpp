#pragma once

// Finite diagonal abelian groups G in GL(n), their weight lattice
// L = Z^n + sum_j Z (1/r_j) a_j, characters, and age.

#include "mckay/arith.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mckay {

/// One generator 1/r (a_1, ..., a_n), stored in lowest terms with 0 <= a_i < r.
struct Generator {
  std::int64_t r = 1;
  std::vector<std::int64_t> weights;

  auto operator<=>(const Generator&) const = default;
};

/// A group element, residues num[i]/den with 0 <= num[i] < den; den is the
/// group exponent.
struct GroupElement {
  std::vector<std::int64_t> num;
  std::int64_t den = 1;

  Rational residue(std::size_t i) const { return Rational(num.at(i), den); }
  bool is_identity() const;
  auto operator<=>(const GroupElement&) const = default;
};

/// A point of the weight lattice, num/den in lowest terms (gcd(num, den) = 1).
/// Use GroupSpec::point to construct one with the membership check.
class LatticePoint {
 public:
  LatticePoint() = default;
  /// Normalizes without checking membership in any lattice.
  LatticePoint(std::vector<Int> num, Int den);

  static LatticePoint unit(std::size_t n, std::size_t i);

  std::size_t dim() const { return num_.size(); }
  const std::vector<Int>& num() const { return num_; }
  const Int& den() const { return den_; }
  Rational coord(std::size_t i) const { return Rational(num_.at(i), den_); }

  bool in_closed_orthant() const;
  /// All coordinates are positive.
  bool is_interior() const;
  /// Exactly one nonzero coordinate.
  bool is_coordinate_ray() const;

  /// Pairing with an integer exponent vector.
  Rational pair(std::span<const int> exps) const;

  /// Numerators rescaled to the common denominator `d` (den must divide d).
  std::vector<Int> scaled_to(const Int& d) const;

  std::string to_string() const;

  /// Lexicographic comparison of the rational coordinates.
  std::strong_ordering operator<=>(const LatticePoint& other) const;
  bool operator==(const LatticePoint& other) const = default;

 private:
  std::vector<Int> num_;
  Int den_ = 1;
};

/// A character of G, stored as its pairing residues against the generators:
/// residues[j] / moduli[j] in [0, 1).
struct Character {
  std::vector<std::int64_t> residues;
  std::vector<std::int64_t> moduli;

  Character operator+(const Character& other) const;
  Character operator-() const;
  bool is_trivial() const;
  Rational pairing(std::size_t j) const { return Rational(residues.at(j), moduli.at(j)); }
  std::string to_string() const;

  bool operator==(const Character& o) const { return residues == o.residues; }
  auto operator<=>(const Character& o) const { return residues <=> o.residues; }
};

class GroupSpec {
 public:
  /// Canonicalizes the generators and computes the element closure.
  /// Throws DomainError for a trivial group, a zero generator or n out of range.
  static GroupSpec from_generators(int n, std::vector<Generator> gens);

  int dim() const { return n_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::int64_t exponent() const { return exponent_; }
  std::size_t order() const { return elements_.size(); }
  bool is_cyclic_single() const { return gens_.size() == 1; }

  /// All elements, sorted; identity first.
  const std::vector<GroupElement>& elements() const { return elements_; }

  bool contains(const LatticePoint& p) const;
  /// Checked construction of a lattice point num/den; throws DomainError if
  /// the point is not in L.
  LatticePoint point(std::vector<Int> num, Int den) const;
  LatticePoint point(const std::vector<std::int64_t>& num, std::int64_t den) const;
  /// The first lattice point on the open ray through the integer vector dir.
  LatticePoint primitive_on_ray(const std::vector<Int>& dir) const;
  bool is_primitive(const LatticePoint& p) const;

  // Characters. Index 0 is the trivial character; indices follow the
  // lexicographic order of the residue tuples, so for a single cyclic
  // generator the index equals the residue.
  const std::vector<Character>& characters() const { return characters_; }
  std::size_t char_index(const Character& c) const;
  Character character_of(std::span<const int> exps) const;
  std::size_t char_index_of(std::span<const int> exps) const;
  std::size_t char_add(std::size_t a, std::size_t b) const;
  std::size_t char_neg(std::size_t a) const;
  /// Index of the character of the coordinate x_i.
  std::size_t coordinate_char(std::size_t i) const { return coord_chars_.at(i); }

  bool has_quasireflections() const { return quasireflections_; }
  /// Every nonidentity element has all residues nonzero.
  bool fixes_only_origin() const { return only_origin_; }

  /// Canonical text, parseable by parse_group.
  std::string to_string() const;

  bool operator==(const GroupSpec& o) const { return n_ == o.n_ && gens_ == o.gens_; }

 private:
  std::uint64_t residue_key(std::span<const std::int64_t> residues) const;

  int n_ = 0;
  std::vector<Generator> gens_;
  std::int64_t exponent_ = 1;
  std::vector<GroupElement> elements_;
  std::map<std::vector<std::int64_t>, std::size_t> element_index_;
  std::vector<Character> characters_;
  std::unordered_map<std::uint64_t, std::size_t> char_lookup_;
  std::vector<std::size_t> coord_chars_;
  bool quasireflections_ = false;
  bool only_origin_ = true;
};

/// Parses "1/r(a1,...,an)[;1/r(...)...]"; whitespace ignored, negative entries
/// reduced mod r. Throws ParseError on syntax errors, DomainError on a trivial
/// group or n outside [2, 4].
GroupSpec parse_group(std::string_view text);

inline const std::vector<GroupElement>& enumerate_elements(const GroupSpec& g) {
  return g.elements();
}

/// G is contained in SL(n): every element's residues sum to an integer.
bool is_gorenstein(const GroupSpec& g);

Rational age(const GroupElement& e);
/// Sum of coordinates; throws DomainError on a negative coordinate.
Rational age(const LatticePoint& p);

/// age(b) - 1 for a primitive point b of L in the closed orthant.
Rational discrepancy(const LatticePoint& b, const GroupSpec& g);

/// Elements of age exactly 1. Throws DomainError if g is not Gorenstein.
std::vector<GroupElement> junior_elements(const GroupSpec& g);

struct StringyEuler {
  std::int64_t value = 0;
  /// Some nonidentity element fixes a positive-dimensional subspace; the
  /// stratified formula would be needed and is not implemented.
  bool stratified = false;
};
StringyEuler stringy_euler(const GroupSpec& g);

/// The cone over n lattice points is basic for L. Throws DomainError when the
/// points are linearly dependent.
bool is_basic_simplex(const std::vector<LatticePoint>& vertices, const GroupSpec& g);

/// det of the n x n matrix of rational coordinates.
Rational determinant(const std::vector<LatticePoint>& rows);

struct Heuristic4d {
  std::size_t junior_count = 0;
  bool basic = false;
  bool heuristic_predicts = false;
};
/// Crepancy heuristic for 1/r(1,1,1,r-3), r >= 4.
Heuristic4d heuristic_4d(std::int64_t r);

}  // namespace mckay
