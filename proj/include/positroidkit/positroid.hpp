#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "positroidkit/matroid.hpp"

namespace pkit {

enum class FixedPointKind { kLoop, kColoop };

/// A permutation of {0..n-1}; `fixed_kind[i]` is read only where perm[i] == i.
struct DecoratedPermutation {
  std::vector<int> perm;
  std::vector<FixedPointKind> fixed_kind;
};

/// I_0, ..., I_{n-1}; I_{i+1} contains I_i - {i} and all terms have equal
/// size (indices mod n).
struct GrassmannNecklace {
  int n = 0;
  std::vector<ElementSet> terms;
};

/// A cyclic ordering of the ground set, starting at element 0.
using CyclicOrdering = std::vector<int>;

/// Proper nonempty flats F with M|F and M/F both connected.
/// Throws Error(kInvalidInput) if M is disconnected.
std::vector<ElementSet> relevant_flats(const Matroid& m);

/// A cyclic ordering in which every relevant flat is a cyclic interval, or
/// nullopt when none exists (M is then not a positroid). Backtracks over
/// orderings starting at 0 and abandons a prefix as soon as some relevant
/// flat can no longer be an interval.
/// Throws Error(kInvalidInput) if M is disconnected.
std::optional<CyclicOrdering> bonin_check(const Matroid& m);

/// Independent re-check of a bonin_check witness: recomputes the relevant
/// flats from materialised restrictions and contractions and tests each for
/// being a cyclic interval of `order`.
bool is_bonin_witness(const Matroid& m, std::span<const int> order);

/// Componentwise bonin_check; single-element components pass.
bool is_positroid(const Matroid& m);

bool is_valid_decorated_permutation(const DecoratedPermutation& dp);
bool is_valid_necklace(const GrassmannNecklace& necklace);

/// I_i = { j : j precedes perm^{-1}(j) in the order i < i+1 < ... } plus
/// coloop-decorated fixed points.
GrassmannNecklace necklace_from_decorated_permutation(const DecoratedPermutation& dp);

/// Bases are the r-subsets B with B >= I_i in the Gale order for the
/// i-shifted linear order, for every i. Throws Error(kInvalidNecklace).
Matroid positroid_from_necklace(const GrassmannNecklace& necklace);

/// Lexicographically minimal basis for each shifted order.
GrassmannNecklace necklace_of(const Matroid& m);

struct PositroidFilters {
  std::optional<int> rank;
  bool simple = false;
  bool connected = false;
  bool three_connected = false;
  /// Keep only positroids with no U_{2,k} minor.
  std::optional<int> no_line_minor;
};

struct PositroidEnumeration {
  /// One matroid per isomorphism class, sorted by canonical form.
  std::vector<Matroid> classes;
  std::size_t decorated_permutations = 0;
  /// Labelled positroids that passed every filter.
  std::size_t labelled_matches = 0;
};

inline constexpr int kMaxEnumerationSize = 9;

/// Every positroid on n elements up to isomorphism, via all decorated
/// permutations. Throws Error(kCapExceeded) when n > kMaxEnumerationSize.
/// The result does not depend on `threads`.
PositroidEnumeration enumerate_positroids(int n, const PositroidFilters& filters,
                                          int threads = 1);

}  // namespace pkit
