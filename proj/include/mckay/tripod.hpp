#pragma once

// Torus-fixed G-clusters: downward-closed monomial sets containing exactly one
// monomial of each character (tripods in three variables, staircases in two).

#include "mckay/monomial.hpp"

#include <cstddef>
#include <vector>

namespace mckay {

struct Tripod {
  int n = 3;
  /// chosen[a] is the basis monomial of character a.
  std::vector<Monomial> chosen;

  /// The basis sorted lexicographically.
  std::vector<Monomial> basis() const;
  bool contains(const Monomial& m) const;

  auto operator<=>(const Tripod& o) const { return chosen <=> o.chosen; }
  bool operator==(const Tripod& o) const { return chosen == o.chosen; }
};

/// Checks downward closure and the transversal property; throws
/// VerificationError with the reason.
void validate_tripod(const Tripod& t, const GroupSpec& g);

struct TripodSearchOptions {
  std::size_t max_order = 200;
  /// 0 = hardware concurrency; 1 = sequential.
  unsigned threads = 1;
};

/// Depth-first search over characters: each character takes a generator of
/// L(a), which fixes the basis monomials of all its divisors. Optionally split
/// across threads at a shallow depth. Sorted canonically.
std::vector<Tripod> enumerate_tripods(const GroupSpec& g, const TripodSearchOptions& opts = {});

/// Independent breadth-first growth of all downward-closed transversals with
/// set deduplication. Exponential; meant for small groups.
std::vector<Tripod> enumerate_tripods_oracle(const GroupSpec& g, std::size_t max_order = 60);

/// The cluster whose basis monomials are the unique marked minima at weight v,
/// or nothing if v lies on a wall or the minima do not form a tripod.
std::optional<Tripod> tripod_at_weight(const std::vector<Int>& v, const GroupSpec& g,
                                       const std::vector<CharacterModule>& modules);

}  // namespace mckay
