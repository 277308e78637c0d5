#include "positroidkit/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "positroidkit/errors.hpp"
#include "positroidkit/isomorphism.hpp"

namespace pkit {

Matroid uniform(int r, int n) {
  if (n < 1 || r < 0 || r > n || n > kMaxGround) {
    throw Error(ErrorKind::kInvalidParameters,
                "uniform(" + std::to_string(r) + "," + std::to_string(n) +
                    ") needs 0 <= r <= n, 1 <= n <= " + std::to_string(kMaxGround));
  }
  return Matroid::from_bases_trusted(n, k_subsets(n, r));
}

Matroid rank3_from_lines(int n, const std::vector<ElementSet>& lines) {
  std::vector<ElementSet> bases;
  for (ElementSet t : k_subsets(n, 3)) {
    bool collinear = std::any_of(lines.begin(), lines.end(),
                                 [&](ElementSet line) { return t.subset_of(line); });
    if (!collinear) bases.push_back(t);
  }
  return Matroid::from_bases(n, std::move(bases));
}

namespace {

std::vector<std::uint8_t> flat_flags(const Matroid& m) {
  std::vector<std::uint8_t> flags(std::size_t{1} << m.size());
  for (std::size_t s = 0; s < flags.size(); ++s) {
    const ElementSet set(static_cast<ElementSet::Bits>(s));
    flags[s] = m.closure(set) == set ? 1 : 0;
  }
  return flags;
}

}  // namespace

Matroid parallel_connection(const Matroid& m, const Matroid& n, int m_base,
                            int n_base) {
  if (m_base < 0 || m_base >= m.size() || n_base < 0 || n_base >= n.size()) {
    throw Error(ErrorKind::kInvalidParameters, "basepoint out of range");
  }
  if (m.loops().contains(m_base) || n.loops().contains(n_base)) {
    throw Error(ErrorKind::kInvalidBasepoint, "basepoint is a loop");
  }
  const int a = m.size();
  const int total = a + n.size() - 1;
  if (total > kMaxGround) {
    throw Error(ErrorKind::kInvalidParameters, "parallel connection too large");
  }
  // label_in_n[j] is the N-label of combined element a + j.
  std::vector<int> label_in_n;
  for (int x = 0; x < n.size(); ++x) {
    if (x != n_base) label_in_n.push_back(x);
  }
  const auto m_flat = flat_flags(m);
  const auto n_flat = flat_flags(n);
  const ElementSet::Bits m_mask = ElementSet::full(a).bits();

  const std::size_t count = std::size_t{1} << total;
  std::vector<ElementSet::Bits> n_trace(count);
  for (std::size_t s = 1; s < count; ++s) {
    const int low = std::countr_zero(s);
    ElementSet::Bits bit = 0;
    if (low < a) {
      bit = low == m_base ? (ElementSet::Bits{1} << n_base) : 0;
    } else {
      bit = ElementSet::Bits{1} << label_in_n[low - a];
    }
    n_trace[s] = n_trace[s & (s - 1)] | bit;
  }

  std::vector<ElementSet> flats;
  for (std::size_t s = 0; s < count; ++s) {
    if (m_flat[s & m_mask] && n_flat[n_trace[s]]) {
      flats.emplace_back(static_cast<ElementSet::Bits>(s));
    }
  }
  // Rank of a flat = length of the longest chain of flats below it.
  std::sort(flats.begin(), flats.end(), [](ElementSet x, ElementSet y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::vector<int> flat_rank(flats.size(), 0);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (flats[j] != flats[i] && flats[j].subset_of(flats[i])) {
        flat_rank[i] = std::max(flat_rank[i], flat_rank[j] + 1);
      }
    }
  }
  // r(S) is the least rank of a flat containing S: superset-minimum sweep.
  std::vector<std::uint8_t> table(count, 0xff);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    table[flats[i].bits()] = static_cast<std::uint8_t>(flat_rank[i]);
  }
  for (int bit = 0; bit < total; ++bit) {
    for (std::size_t s = 0; s < count; ++s) {
      if (!(s & (std::size_t{1} << bit))) {
        table[s] = std::min(table[s], table[s | (std::size_t{1} << bit)]);
      }
    }
  }
  return Matroid::from_rank_table(total, std::move(table));
}

Matroid extremal_family(int r, int l) {
  if (r < 2 || l < 1) {
    throw Error(ErrorKind::kInvalidParameters, "extremal family needs r >= 2, l >= 1");
  }
  const Matroid line = uniform(2, l + 1);
  Matroid current = line;
  for (int copy = 1; copy < r - 1; ++copy) {
    current = parallel_connection(current, line, current.size() - 1, 0);
  }
  return current;
}

Matroid build_parallel_connection_tree(const ParallelConnectionTree& tree, int l) {
  if (tree.copies < 1 ||
      static_cast<int>(tree.attachments.size()) != tree.copies - 1) {
    throw Error(ErrorKind::kInvalidParameters, "malformed parallel connection tree");
  }
  const Matroid line = uniform(2, l + 1);
  Matroid current = line;
  // members[k][i]: combined label of position i in block k.
  std::vector<std::vector<int>> members;
  members.emplace_back();
  for (int i = 0; i <= l; ++i) members[0].push_back(i);
  for (int k = 1; k < tree.copies; ++k) {
    const auto [block, position] = tree.attachments[k - 1];
    if (block < 0 || block >= k || position < 0 || position > l) {
      throw Error(ErrorKind::kInvalidParameters, "attachment index out of range");
    }
    const int base = members[block][position];
    const int first_new = current.size();
    current = parallel_connection(current, line, base, 0);
    std::vector<int> mine = {base};
    for (int i = 0; i < l; ++i) mine.push_back(first_new + i);
    members.push_back(std::move(mine));
  }
  return current;
}

std::vector<Matroid> all_parallel_connection_trees(int r, int l) {
  if (r < 2 || l < 1) {
    throw Error(ErrorKind::kInvalidParameters, "trees need r >= 2, l >= 1");
  }
  std::map<std::string, Matroid> classes;
  ParallelConnectionTree tree;
  tree.copies = r - 1;
  std::function<void(int)> extend = [&](int block) {
    if (block == tree.copies) {
      Matroid m = build_parallel_connection_tree(tree, l);
      classes.emplace(canonical_form(m), std::move(m));
      return;
    }
    for (int parent = 0; parent < block; ++parent) {
      for (int position = 0; position <= l; ++position) {
        tree.attachments.emplace_back(parent, position);
        extend(block + 1);
        tree.attachments.pop_back();
      }
    }
  };
  extend(1);
  std::vector<Matroid> out;
  for (auto& [form, m] : classes) out.push_back(std::move(m));
  return out;
}

Matroid principal_extension(const Matroid& m, ElementSet flat) {
  if (!flat.within(m.size()) || !m.is_flat(flat) || m.rank_of(flat) < 1) {
    throw Error(ErrorKind::kInvalidFlat,
                flat.to_string() + " is not a flat of rank >= 1");
  }
  const int n = m.size();
  if (n + 1 > kMaxGround) {
    throw Error(ErrorKind::kInvalidParameters, "extension exceeds ground-set cap");
  }
  const auto source = m.rank_table();
  const std::size_t half = std::size_t{1} << n;
  std::vector<std::uint8_t> table(half * 2);
  for (std::size_t s = 0; s < half; ++s) {
    table[s] = source[s];
    table[s | half] = std::min<std::uint8_t>(
        static_cast<std::uint8_t>(source[s] + 1), source[s | flat.bits()]);
  }
  return Matroid::from_rank_table(n + 1, std::move(table));
}

int whirl_like_size(int r, int l) { return r + r * ((l - 1) / 2); }

namespace {

Matroid build_whirl(int r, int l, bool plus) {
  if (r < 2 || l < 3) {
    throw Error(ErrorKind::kInvalidParameters, "whirl-like needs r >= 2, l >= 3");
  }
  const int per_line = (l - 1) / 2;
  const int lines = r == 2 ? 1 : r;
  const int total = r + lines * per_line + (plus ? 1 : 0);
  if (total > kMaxGround) {
    throw Error(ErrorKind::kInvalidParameters, "whirl-like too large");
  }
  Matroid m = uniform(r, r);
  // added[i] lists the creation labels of points on line b_i b_{i+1}.
  std::vector<std::vector<int>> added(lines);
  auto extend_line = [&](int i) {
    const ElementSet span = m.closure(ElementSet{i, (i + 1) % r});
    added[i].push_back(m.size());
    m = principal_extension(m, span);
  };
  for (int i = 0; i < lines; ++i) {
    for (int t = 0; t < per_line; ++t) extend_line(i);
  }
  if (plus) extend_line(0);

  std::vector<int> perm(m.size());
  int next = 0;
  for (int i = 0; i < r; ++i) {
    perm[i] = next++;
    if (i < lines) {
      for (int e : added[i]) perm[e] = next++;
    }
  }
  return relabel(m, perm);
}

}  // namespace

Matroid whirl_like(int r, int l) { return build_whirl(r, l, false); }
Matroid whirl_like_plus(int r, int l) { return build_whirl(r, l, true); }

std::string to_string(CatalogId id) {
  switch (id) {
    case CatalogId::kM1: return "M1";
    case CatalogId::kM2: return "M2";
    case CatalogId::kM3: return "M3";
    case CatalogId::kM4: return "M4";
    case CatalogId::kM5: return "M5";
    case CatalogId::kM6: return "M6";
    case CatalogId::kM7: return "M7";
    case CatalogId::kM8: return "M8";
    case CatalogId::kFig2: return "FIG2";
  }
  return "?";
}

std::optional<CatalogId> parse_catalog_id(const std::string& name) {
  for (CatalogId id : kAllCatalogIds) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::vector<ElementSet> catalog_lines(CatalogId id) {
  const std::vector<ElementSet> m1 = {{0, 1, 2}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}};
  const std::vector<ElementSet> m5 = {{0, 1, 2}, {0, 3, 6}, {1, 4, 6}, {2, 5, 6}};
  auto plus = [](std::vector<ElementSet> base, std::initializer_list<ElementSet> more) {
    base.insert(base.end(), more.begin(), more.end());
    return base;
  };
  switch (id) {
    case CatalogId::kM1: return m1;
    case CatalogId::kM2: return plus(m1, {{3, 4, 5}});
    case CatalogId::kM3: return plus(m1, {{3, 4, 5}, {6, 7, 8}});
    case CatalogId::kM4: return {{0, 1, 2}, {0, 3, 5}, {1, 4, 5}, {2, 3, 4}};
    case CatalogId::kM5: return m5;
    case CatalogId::kM6: return plus(m5, {{3, 4, 5}});
    case CatalogId::kM7: return {{0, 1, 2}, {0, 3, 6}, {1, 4, 6}, {2, 4, 5}};
    case CatalogId::kM8: return {{0, 1, 2}, {0, 3, 6}, {1, 4, 6}};
    case CatalogId::kFig2: return {};
  }
  return {};
}

Matroid catalog(CatalogId id) {
  switch (id) {
    case CatalogId::kM1:
    case CatalogId::kM2:
    case CatalogId::kM3: return rank3_from_lines(9, catalog_lines(id));
    case CatalogId::kM4: return rank3_from_lines(6, catalog_lines(id));
    case CatalogId::kM5:
    case CatalogId::kM6:
    case CatalogId::kM7:
    case CatalogId::kM8: return rank3_from_lines(7, catalog_lines(id));
    case CatalogId::kFig2: break;
  }
  // Rank 4 on nine elements: L = {0,1,2} with L_1 = {0,3,4}, L_2 = {1,5,6},
  // L_3 = {2,7,8}. The circuits of size at most four are the four lines and
  // the 4-subsets of each plane L u L_i that contain neither L nor L_i.
  const ElementSet spine{0, 1, 2};
  const std::vector<ElementSet> arms = {{0, 3, 4}, {1, 5, 6}, {2, 7, 8}};
  std::vector<ElementSet> circuits = {spine};
  circuits.insert(circuits.end(), arms.begin(), arms.end());
  for (ElementSet arm : arms) {
    const ElementSet plane = spine | arm;
    for (int e : plane) {
      const ElementSet four = plane.without(e);
      if (!spine.subset_of(four) && !arm.subset_of(four)) circuits.push_back(four);
    }
  }
  std::vector<ElementSet> bases;
  for (ElementSet s : k_subsets(9, 4)) {
    bool dependent = std::any_of(circuits.begin(), circuits.end(),
                                 [&](ElementSet c) { return c.subset_of(s); });
    if (!dependent) bases.push_back(s);
  }
  return Matroid::from_bases(9, std::move(bases));
}

}  // namespace pkit
