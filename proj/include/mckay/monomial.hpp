#pragma once

// Monomials, eigenspace generator sets L(a) and their products.

#include "mckay/group.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mckay {

/// x^e0 y^e1 [z^e2] for n in {2, 3}; unused trailing entries stay zero.
struct Monomial {
  std::array<int, 3> e{};
  int n = 3;

  Monomial() = default;
  Monomial(int n_, std::array<int, 3> exps);
  static Monomial one(int n) { return Monomial(n, {0, 0, 0}); }
  static Monomial var(int n, int i);

  std::span<const int> exps() const { return {e.data(), static_cast<std::size_t>(n)}; }
  int degree() const { return e[0] + e[1] + e[2]; }
  bool divides(const Monomial& other) const;
  bool is_one() const { return e == std::array<int, 3>{}; }
  Monomial operator*(const Monomial& o) const;
  /// "x^2 y z^4", "1" for the constant monomial.
  std::string to_string() const;

  auto operator<=>(const Monomial& o) const { return e <=> o.e; }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

/// The minimal monomial generators of one eigenspace, sorted lexicographically.
/// Exponents are also kept as columns for the vectorized pairing kernels.
class CharacterModule {
 public:
  CharacterModule() = default;
  CharacterModule(std::size_t character, std::vector<Monomial> generators);

  std::size_t character() const { return character_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool contains(const Monomial& m) const;

  const std::vector<std::int32_t>& column(int i) const { return cols_[static_cast<std::size_t>(i)]; }

  bool operator==(const CharacterModule& o) const { return character_ == o.character_ && gens_ == o.gens_; }

 private:
  std::size_t character_ = 0;
  std::vector<Monomial> gens_;
  std::array<std::vector<std::int32_t>, 3> cols_;
};

Character character_of_monomial(const Monomial& m, const GroupSpec& g);

/// L(a) for one character index. Requires n in {2, 3}.
CharacterModule minimal_generators(std::size_t a, const GroupSpec& g);
/// L(a) for every character, indexed by character.
std::vector<CharacterModule> all_minimal_generators(const GroupSpec& g);

/// Generators that are the unique minimum of <v, -> for some v in the open
/// orthant (vertices of the Newton polyhedron).
std::vector<Monomial> lower_hull_subset(const CharacterModule& mod);

struct MarkedMinimum {
  Rational value;                 ///< min over generators of <v, m>
  std::vector<Monomial> minimizers;  ///< sorted; size > 1 means v is on a wall

  bool is_tie() const { return minimizers.size() > 1; }
  const Monomial& unique() const;  ///< throws DomainError on a tie
};

/// Minimizes <v, m> over the generators. v must be in the closed orthant.
MarkedMinimum marked_minimum(const CharacterModule& mod, const LatticePoint& v);
/// Same with an integer weight vector (direction only matters).
MarkedMinimum marked_minimum(const CharacterModule& mod, const std::vector<Int>& v);

/// Minimal elements under divisibility of all products of one generator per
/// factor; the character is the sum of the factors.
CharacterModule module_product(const std::vector<std::size_t>& chars, const GroupSpec& g);
CharacterModule module_product(const std::vector<std::size_t>& chars, const GroupSpec& g,
                               const std::vector<CharacterModule>& modules);

/// Set equality of generators; throws DomainError if the characters differ.
bool module_equal(const CharacterModule& a, const CharacterModule& b);

}  // namespace mckay
