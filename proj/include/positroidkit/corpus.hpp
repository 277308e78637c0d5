#pragma once

#include <vector>

#include "positroidkit/matroid.hpp"

namespace pkit {

inline constexpr int kMaxSimpleRank3 = 9;
inline constexpr int kMaxFullCorpus = 7;

/// Simple rank-3 matroids on n points, one per isomorphism class, sorted by
/// canonical form. Grown one point at a time: the lines through a new point
/// partition the old points into single points, pairs not on a common long
/// line, and whole long lines.
/// Throws Error(kCapExceeded) unless 3 <= n <= kMaxSimpleRank3.
std::vector<Matroid> simple_rank3_matroids(int n);

/// Simple rank-3 matroids for every size 3..max_n; entry i holds size i.
std::vector<std::vector<Matroid>> simple_rank3_by_size(int max_n);

/// Every matroid of rank <= 3 on n elements, loops and parallel classes
/// included, one per isomorphism class.
/// Throws Error(kCapExceeded) unless 0 <= n <= kMaxSimpleRank3.
std::vector<Matroid> matroids_rank_at_most3(int n);

/// Every matroid on n elements up to isomorphism: rank <= 3 plus duals.
/// Throws Error(kCapExceeded) unless 0 <= n <= kMaxFullCorpus.
std::vector<Matroid> all_matroids(int n);

/// Replaces each point p of a simple matroid by a parallel class of
/// class_sizes[p] >= 1 elements and appends `loops` loops. Elements of the
/// class of point p are consecutive, in point order.
Matroid inflate(const Matroid& simple, const std::vector<int>& class_sizes, int loops);

}  // namespace pkit
