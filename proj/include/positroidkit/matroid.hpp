#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "positroidkit/element_set.hpp"

namespace pkit {

/// A matroid on {0, ..., n-1} given by its basis family.
///
/// Values are immutable and cheap to copy (the basis list and the derived
/// rank table are shared). Every rank query is a table lookup; the table has
/// 2^n entries, which is why ground sets are capped at kMaxGround.
class Matroid {
 public:
  /// Checks that `bases` is a nonempty family of equal-size subsets of
  /// {0..n-1} satisfying basis exchange. Throws Error(kNotAMatroid) or
  /// Error(kInvalidParameters) otherwise.
  static Matroid from_bases(int n, std::vector<ElementSet> bases);

  /// Same as from_bases without the exchange check. Only for families that
  /// are matroids by construction.
  static Matroid from_bases_trusted(int n, std::vector<ElementSet> bases);

  /// Builds from a full rank table (size 2^n). The table must be a matroid
  /// rank function; not checked.
  static Matroid from_rank_table(int n, std::vector<std::uint8_t> table);

  int size() const { return data_->n; }
  int rank() const { return data_->rank; }
  ElementSet ground() const { return ElementSet::full(data_->n); }

  /// Bases in lexicographic order of their sorted member lists.
  const std::vector<ElementSet>& bases() const { return data_->bases; }

  /// Throws Error(kInvalidSubset) if s has a member >= size().
  int rank_of(ElementSet s) const;
  ElementSet closure(ElementSet s) const;
  bool is_flat(ElementSet s) const { return closure(s) == s; }
  bool is_independent(ElementSet s) const { return rank_of(s) == s.size(); }
  bool is_basis(ElementSet s) const {
    return s.size() == rank() && is_independent(s);
  }

  ElementSet loops() const;
  ElementSet coloops() const;
  bool is_simple() const;

  /// Lexicographically first basis of the restriction to s (greedy).
  ElementSet greedy_basis(ElementSet s) const;

  /// Raw table, indexed by subset bits.
  std::span<const std::uint8_t> rank_table() const { return data_->table; }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.size() == b.size() && a.bases() == b.bases();
  }

 private:
  struct Data {
    int n = 0;
    int rank = 0;
    std::vector<ElementSet> bases;
    std::vector<std::uint8_t> table;
  };

  explicit Matroid(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Flats grouped by rank; by_rank[k] is sorted by bits.
struct FlatLattice {
  std::vector<std::vector<ElementSet>> by_rank;

  std::size_t count() const;
  bool contains(ElementSet s) const;
  std::vector<ElementSet> all() const;
};

FlatLattice flat_lattice(const Matroid& m);

/// Rank-1 flats.
std::vector<ElementSet> points(const Matroid& m);
/// Number of points, written epsilon(M) in the literature.
int point_count(const Matroid& m);
/// Number of rank-1 flats contained in s.
int points_in(const Matroid& m, ElementSet s);

/// Rank-2 flats containing at least three points.
std::vector<ElementSet> long_lines(const Matroid& m);

/// M restricted to `keep`, relabelled 0.. in increasing order.
Matroid restriction(const Matroid& m, ElementSet keep);
/// M \ D. Throws Error(kEmptyMatroid) when D is the whole ground set.
Matroid deletion(const Matroid& m, ElementSet removed);
/// M / C on E - C. C need not be independent or a flat.
Matroid contraction(const Matroid& m, ElementSet contracted);
/// M / C \ D in one step; C and D must be disjoint.
Matroid minor(const Matroid& m, ElementSet contracted, ElementSet removed);

Matroid dual(const Matroid& m);
Matroid direct_sum(const Matroid& a, const Matroid& b);

/// perm[e] is the new label of element e.
Matroid relabel(const Matroid& m, std::span<const int> perm);

struct Simplification {
  Matroid simple;
  /// classes[i] is the parallel class represented by element i of `simple`.
  std::vector<ElementSet> classes;
};
Simplification simplify(const Matroid& m);

/// Finest partition of E into separators, ordered by smallest element.
std::vector<ElementSet> components(const Matroid& m);
bool is_connected(const Matroid& m);

/// Connectivity of M|A and M/C without materialising the minors.
bool restriction_connected(const Matroid& m, ElementSet keep);
bool contraction_connected(const Matroid& m, ElementSet contracted);

/// Tutte 3-connectivity: connected, at least four elements, no 2-separation.
bool is_3connected(const Matroid& m);

/// Basis exchange checked pairwise on the explicit family. Quadratic in the
/// number of bases; used by tests and validation of small inputs.
bool satisfies_basis_exchange(int n, const std::vector<ElementSet>& bases);

}  // namespace pkit
