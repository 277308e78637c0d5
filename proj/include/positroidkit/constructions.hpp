#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "positroidkit/matroid.hpp"

namespace pkit {

/// U_{r,n}: every r-subset is a basis.
Matroid uniform(int r, int n);

/// Simple rank-3 matroid on n points whose long lines are exactly `lines`
/// (lines must pairwise share at most one point).
Matroid rank3_from_lines(int n, const std::vector<ElementSet>& lines);

/// Parallel connection P_e(M, N) of M and N glued at m_base ~ n_base.
///
/// The result lives on |M| + |N| - 1 elements: M keeps its labels, the
/// elements of N other than n_base follow in their original order, and
/// n_base is identified with m_base. The flats are computed literally as
/// the subsets whose trace on each side is a flat of that side.
/// Throws Error(kInvalidBasepoint) if either basepoint is a loop.
Matroid parallel_connection(const Matroid& m, const Matroid& n, int m_base,
                            int n_base);

/// Path-shaped member of the extremal class: r-1 copies of U_{2,l+1}, each
/// glued at the last element of the previous copy. Elements along each line
/// are consecutive, so 0..n-1 is a valid positroid ordering.
Matroid extremal_family(int r, int l);

/// Iterated parallel connection of U_{2,l+1} blocks. Block k (k >= 1) is
/// glued to element `attachments[k-1].second` (0..l, in that block's own
/// order) of the earlier block `attachments[k-1].first`. Within a block,
/// position 0 is its basepoint; block 0 is labelled 0..l.
struct ParallelConnectionTree {
  int copies = 1;
  std::vector<std::pair<int, int>> attachments;
};

Matroid build_parallel_connection_tree(const ParallelConnectionTree& tree, int l);

/// One representative per isomorphism class of iterated parallel
/// connections of r-1 copies of U_{2,l+1}, sorted by canonical form.
std::vector<Matroid> all_parallel_connection_trees(int r, int l);

/// Adds one element freely placed on `flat`: for S containing the new
/// element e, r(S) = min(r(S-e)+1, r((S-e) u F)). The new element gets label
/// m.size(). Throws Error(kInvalidFlat) unless `flat` is a flat of rank >= 1.
Matroid principal_extension(const Matroid& m, ElementSet flat);

/// W(r,l): basis b_0..b_{r-1} with floor((l-1)/2) free points on each
/// cyclically consecutive basis line. Labelled in the natural cyclic order
/// b_0, points on b_0b_1, b_1, points on b_1b_2, ...
/// For r = 2 the two cyclic lines coincide and are filled once.
Matroid whirl_like(int r, int l);
/// W(r,l)^+: W(r,l) plus one more free point on cl{b_0, b_1}.
Matroid whirl_like_plus(int r, int l);
/// Size of W(r,l): r + r*floor((l-1)/2) for r >= 3.
int whirl_like_size(int r, int l);

enum class CatalogId { kM1, kM2, kM3, kM4, kM5, kM6, kM7, kM8, kFig2 };

inline constexpr std::array<CatalogId, 9> kAllCatalogIds = {
    CatalogId::kM1, CatalogId::kM2, CatalogId::kM3, CatalogId::kM4,
    CatalogId::kM5, CatalogId::kM6, CatalogId::kM7, CatalogId::kM8,
    CatalogId::kFig2};

/// Order used by catalog-minor search: small targets first.
inline constexpr std::array<CatalogId, 9> kCatalogSearchOrder = {
    CatalogId::kM4, CatalogId::kM6, CatalogId::kM7, CatalogId::kM8,
    CatalogId::kM5, CatalogId::kM1, CatalogId::kM2, CatalogId::kM3,
    CatalogId::kFig2};

std::string to_string(CatalogId id);
std::optional<CatalogId> parse_catalog_id(const std::string& name);

/// The nine excluded minors: M1..M8 of rank 3 and the rank-4 FIG2.
Matroid catalog(CatalogId id);
/// Long lines used to define the rank-3 entries (empty for FIG2).
std::vector<ElementSet> catalog_lines(CatalogId id);

}  // namespace pkit
