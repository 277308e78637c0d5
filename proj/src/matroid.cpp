#include "positroidkit/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "positroidkit/errors.hpp"

namespace pkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidSubset: return "invalid-subset";
    case ErrorKind::kEmptyMatroid: return "empty-matroid";
    case ErrorKind::kInvalidParameters: return "invalid-parameters";
    case ErrorKind::kInvalidBasepoint: return "invalid-basepoint";
    case ErrorKind::kInvalidFlat: return "invalid-flat";
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kInvalidNecklace: return "invalid-necklace";
    case ErrorKind::kInvalidMatrix: return "invalid-matrix";
    case ErrorKind::kNotAChirotope: return "not-a-chirotope";
    case ErrorKind::kInvalidContraction: return "invalid-contraction";
    case ErrorKind::kNotAMatroid: return "not-a-matroid";
    case ErrorKind::kParse: return "parse-error";
    case ErrorKind::kCapExceeded: return "cap-exceeded";
  }
  return "error";
}

std::string ElementSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int e : *this) {
    if (!first) out << ',';
    out << e;
    first = false;
  }
  out << '}';
  return out.str();
}

bool lex_less(ElementSet a, ElementSet b) {
  if (a == b) return false;
  const ElementSet::Bits diff = a.bits() ^ b.bits();
  const int d = std::countr_zero(diff);
  const ElementSet::Bits above = d >= 31 ? 0 : ~((ElementSet::Bits{2} << d) - 1);
  if (a.contains(d)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

std::vector<ElementSet> k_subsets(int n, int k) {
  std::vector<ElementSet> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {ElementSet{}};
  // Gosper's hack over k-bit words.
  ElementSet::Bits s = (ElementSet::Bits{1} << k) - 1;
  const ElementSet::Bits limit = ElementSet::Bits{1} << n;
  while (s < limit) {
    out.emplace_back(s);
    const ElementSet::Bits c = s & (~s + 1);
    const ElementSet::Bits r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

namespace {

std::vector<std::uint8_t> rank_table_from_bases(
    int n, int rank, const std::vector<ElementSet>& bases) {
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> indep(total, 0);
  for (ElementSet b : bases) indep[b.bits()] = 1;
  // Supersets have larger numeric value, so a descending sweep sees them
  // first.
  for (std::size_t s = total; s-- > 0;) {
    if (indep[s] || std::popcount(s) >= rank) continue;
    const ElementSet rest = ElementSet(static_cast<ElementSet::Bits>(s)).complement(n);
    for (int e : rest) {
      if (indep[s | (std::size_t{1} << e)]) {
        indep[s] = 1;
        break;
      }
    }
  }
  std::vector<std::uint8_t> table(total, 0);
  for (std::size_t s = 1; s < total; ++s) {
    if (indep[s]) {
      table[s] = static_cast<std::uint8_t>(std::popcount(s));
      continue;
    }
    std::uint8_t best = 0;
    for (int e : ElementSet(static_cast<ElementSet::Bits>(s))) {
      best = std::max(best, table[s & ~(std::size_t{1} << e)]);
    }
    table[s] = best;
  }
  return table;
}

std::vector<ElementSet> bases_from_table(int n, int rank,
                                         const std::vector<std::uint8_t>& t) {
  std::vector<ElementSet> bases;
  for (ElementSet s : k_subsets(n, rank)) {
    if (t[s.bits()] == rank) bases.push_back(s);
  }
  std::sort(bases.begin(), bases.end(), lex_less);
  return bases;
}

bool satisfies_rank_axioms(int n, const std::vector<std::uint8_t>& t) {
  const std::size_t total = std::size_t{1} << n;
  if (t[0] != 0) return false;
  for (std::size_t s = 0; s < total; ++s) {
    const ElementSet rest =
        ElementSet(static_cast<ElementSet::Bits>(s)).complement(n);
    for (int e : rest) {
      const std::size_t se = s | (std::size_t{1} << e);
      if (t[se] < t[s] || t[se] > t[s] + 1) return false;
      for (int f : rest) {
        if (f <= e) continue;
        const std::size_t sf = s | (std::size_t{1} << f);
        if (t[se] + t[sf] < t[se | sf] + t[s]) return false;
      }
    }
  }
  return true;
}

void require_ground_size(int n) {
  if (n < 0 || n > kMaxGround) {
    throw Error(ErrorKind::kInvalidParameters,
                "ground set size " + std::to_string(n) + " outside 0.." +
                    std::to_string(kMaxGround));
  }
}

template <typename RankFn>
std::vector<ElementSet> components_by_oracle(ElementSet ground, RankFn rank) {
  // Components of a matroid are the connected components of its
  // fundamental-circuit graph with respect to any one basis.
  // `rank` may carry a constant offset (contraction oracles).
  ElementSet basis;
  int r = rank(ElementSet{});
  for (int e : ground) {
    if (rank(basis.with(e)) > r) {
      basis = basis.with(e);
      ++r;
    }
  }
  std::vector<int> parent(kMaxGround);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x : ground - basis) {
    for (int b : basis) {
      if (rank(basis.without(b).with(x)) == r) parent[find(x)] = find(b);
    }
  }
  std::vector<ElementSet> groups(kMaxGround);
  for (int e : ground) groups[find(e)] = groups[find(e)].with(e);
  std::vector<ElementSet> out;
  for (ElementSet g : groups) {
    if (!g.empty()) out.push_back(g);
  }
  std::sort(out.begin(), out.end(),
            [](ElementSet a, ElementSet b) { return a.first() < b.first(); });
  return out;
}

}  // namespace

Matroid Matroid::from_bases(int n, std::vector<ElementSet> bases) {
  require_ground_size(n);
  if (bases.empty()) {
    throw Error(ErrorKind::kNotAMatroid, "basis family is empty");
  }
  const int rank = bases.front().size();
  for (ElementSet b : bases) {
    if (!b.within(n)) {
      throw Error(ErrorKind::kInvalidSubset,
                  "basis " + b.to_string() + " outside ground set of size " +
                      std::to_string(n));
    }
    if (b.size() != rank) {
      throw Error(ErrorKind::kNotAMatroid, "bases of different sizes");
    }
  }
  std::sort(bases.begin(), bases.end(), lex_less);
  if (std::adjacent_find(bases.begin(), bases.end()) != bases.end()) {
    throw Error(ErrorKind::kNotAMatroid, "repeated basis");
  }
  auto table = rank_table_from_bases(n, rank, bases);
  if (!satisfies_rank_axioms(n, table)) {
    throw Error(ErrorKind::kNotAMatroid, "basis exchange fails");
  }
  auto data = std::make_shared<Data>();
  data->n = n;
  data->rank = rank;
  data->bases = std::move(bases);
  data->table = std::move(table);
  return Matroid(std::move(data));
}

Matroid Matroid::from_bases_trusted(int n, std::vector<ElementSet> bases) {
  require_ground_size(n);
  std::sort(bases.begin(), bases.end(), lex_less);
  auto data = std::make_shared<Data>();
  data->n = n;
  data->rank = bases.empty() ? 0 : bases.front().size();
  data->table = rank_table_from_bases(n, data->rank, bases);
  data->bases = std::move(bases);
  return Matroid(std::move(data));
}

Matroid Matroid::from_rank_table(int n, std::vector<std::uint8_t> table) {
  require_ground_size(n);
  auto data = std::make_shared<Data>();
  data->n = n;
  data->rank = table.back();
  data->bases = bases_from_table(n, data->rank, table);
  data->table = std::move(table);
  return Matroid(std::move(data));
}

int Matroid::rank_of(ElementSet s) const {
  if (!s.within(data_->n)) {
    throw Error(ErrorKind::kInvalidSubset,
                s.to_string() + " not a subset of a " +
                    std::to_string(data_->n) + "-element ground set");
  }
  return data_->table[s.bits()];
}

ElementSet Matroid::closure(ElementSet s) const {
  const int r = rank_of(s);
  ElementSet out = s;
  for (int e : s.complement(data_->n)) {
    if (data_->table[s.with(e).bits()] == r) out = out.with(e);
  }
  return out;
}

ElementSet Matroid::loops() const { return closure(ElementSet{}); }

ElementSet Matroid::coloops() const {
  ElementSet out;
  const ElementSet all = ground();
  for (int e : all) {
    if (data_->table[all.without(e).bits()] < data_->rank) out = out.with(e);
  }
  return out;
}

bool Matroid::is_simple() const {
  const auto& t = data_->table;
  for (int e = 0; e < data_->n; ++e) {
    if (t[ElementSet::single(e).bits()] != 1) return false;
    for (int f = e + 1; f < data_->n; ++f) {
      if (t[ElementSet{e, f}.bits()] != 2) return false;
    }
  }
  return true;
}

ElementSet Matroid::greedy_basis(ElementSet s) const {
  ElementSet basis;
  int r = 0;
  for (int e : s) {
    if (rank_of(basis.with(e)) > r) {
      basis = basis.with(e);
      ++r;
    }
  }
  return basis;
}

std::size_t FlatLattice::count() const {
  std::size_t c = 0;
  for (const auto& level : by_rank) c += level.size();
  return c;
}

bool FlatLattice::contains(ElementSet s) const {
  for (const auto& level : by_rank) {
    if (std::binary_search(level.begin(), level.end(), s)) return true;
  }
  return false;
}

std::vector<ElementSet> FlatLattice::all() const {
  std::vector<ElementSet> out;
  for (const auto& level : by_rank) out.insert(out.end(), level.begin(), level.end());
  return out;
}

FlatLattice flat_lattice(const Matroid& m) {
  FlatLattice lattice;
  lattice.by_rank.resize(m.rank() + 1);
  lattice.by_rank[0].push_back(m.loops());
  for (int k = 0; k < m.rank(); ++k) {
    std::unordered_set<ElementSet> next;
    for (ElementSet f : lattice.by_rank[k]) {
      ElementSet covered = f;
      for (int e : f.complement(m.size())) {
        if (covered.contains(e)) continue;
        const ElementSet g = m.closure(f.with(e));
        covered |= g;
        next.insert(g);
      }
    }
    lattice.by_rank[k + 1].assign(next.begin(), next.end());
    std::sort(lattice.by_rank[k + 1].begin(), lattice.by_rank[k + 1].end());
  }
  return lattice;
}

std::vector<ElementSet> points(const Matroid& m) {
  std::vector<ElementSet> out;
  ElementSet seen = m.loops();
  for (int e : m.ground()) {
    if (seen.contains(e)) continue;
    const ElementSet p = m.closure(ElementSet::single(e));
    seen |= p;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int point_count(const Matroid& m) { return static_cast<int>(points(m).size()); }

int points_in(const Matroid& m, ElementSet s) {
  int count = 0;
  ElementSet seen = m.loops();
  for (int e : s) {
    if (seen.contains(e)) continue;
    seen |= m.closure(ElementSet::single(e));
    ++count;
  }
  return count;
}

std::vector<ElementSet> long_lines(const Matroid& m) {
  std::vector<ElementSet> out;
  if (m.rank() < 2) return out;
  const FlatLattice lattice = flat_lattice(m);
  for (ElementSet line : lattice.by_rank[2]) {
    if (points_in(m, line) >= 3) out.push_back(line);
  }
  return out;
}

Matroid minor(const Matroid& m, ElementSet contracted, ElementSet removed) {
  if (!contracted.within(m.size()) || !removed.within(m.size())) {
    throw Error(ErrorKind::kInvalidSubset, "minor sets outside ground set");
  }
  if (!(contracted & removed).empty()) {
    throw Error(ErrorKind::kInvalidParameters,
                "contracted and deleted sets overlap");
  }
  const ElementSet keep = m.ground() - contracted - removed;
  const std::vector<int> kept = keep.to_vector();
  const int k = static_cast<int>(kept.size());
  const auto source = m.rank_table();
  const int base = source[contracted.bits()];
  std::vector<std::uint8_t> table(std::size_t{1} << k);
  std::vector<ElementSet::Bits> image(std::size_t{1} << k);
  image[0] = contracted.bits();
  table[0] = 0;
  for (std::size_t t = 1; t < table.size(); ++t) {
    const int low = std::countr_zero(t);
    image[t] = image[t & (t - 1)] | (ElementSet::Bits{1} << kept[low]);
    table[t] = static_cast<std::uint8_t>(source[image[t]] - base);
  }
  return Matroid::from_rank_table(k, std::move(table));
}

Matroid restriction(const Matroid& m, ElementSet keep) {
  if (!keep.within(m.size())) {
    throw Error(ErrorKind::kInvalidSubset, keep.to_string() + " outside ground set");
  }
  return minor(m, ElementSet{}, m.ground() - keep);
}

Matroid deletion(const Matroid& m, ElementSet removed) {
  if (!removed.within(m.size())) {
    throw Error(ErrorKind::kInvalidSubset, removed.to_string() + " outside ground set");
  }
  if (removed == m.ground()) {
    throw Error(ErrorKind::kEmptyMatroid, "deleting the whole ground set");
  }
  return minor(m, ElementSet{}, removed);
}

Matroid contraction(const Matroid& m, ElementSet contracted) {
  return minor(m, contracted, ElementSet{});
}

Matroid dual(const Matroid& m) {
  std::vector<ElementSet> bases;
  bases.reserve(m.bases().size());
  for (ElementSet b : m.bases()) bases.push_back(b.complement(m.size()));
  return Matroid::from_bases_trusted(m.size(), std::move(bases));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int shift = a.size();
  std::vector<ElementSet> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (ElementSet x : a.bases()) {
    for (ElementSet y : b.bases()) {
      bases.push_back(x | ElementSet(y.bits() << shift));
    }
  }
  return Matroid::from_bases_trusted(a.size() + b.size(), std::move(bases));
}

Matroid relabel(const Matroid& m, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != m.size()) {
    throw Error(ErrorKind::kInvalidParameters, "relabelling has wrong length");
  }
  std::vector<ElementSet> bases;
  bases.reserve(m.bases().size());
  for (ElementSet b : m.bases()) {
    ElementSet image;
    for (int e : b) image = image.with(perm[e]);
    bases.push_back(image);
  }
  return Matroid::from_bases_trusted(m.size(), std::move(bases));
}

Simplification simplify(const Matroid& m) {
  std::vector<ElementSet> classes;
  for (ElementSet p : points(m)) classes.push_back(p - m.loops());
  std::sort(classes.begin(), classes.end(),
            [](ElementSet a, ElementSet b) { return a.first() < b.first(); });
  ElementSet reps;
  for (ElementSet c : classes) reps = reps.with(c.first());
  return {restriction(m, reps), std::move(classes)};
}

std::vector<ElementSet> components(const Matroid& m) {
  const auto t = m.rank_table();
  return components_by_oracle(m.ground(),
                              [&](ElementSet s) { return int{t[s.bits()]}; });
}

bool is_connected(const Matroid& m) { return components(m).size() <= 1; }

bool restriction_connected(const Matroid& m, ElementSet keep) {
  const auto t = m.rank_table();
  return components_by_oracle(keep, [&](ElementSet s) {
           return int{t[s.bits()]};
         }).size() <= 1;
}

bool contraction_connected(const Matroid& m, ElementSet contracted) {
  const auto t = m.rank_table();
  const ElementSet::Bits c = contracted.bits();
  return components_by_oracle(m.ground() - contracted, [&](ElementSet s) {
           return int{t[s.bits() | c]};
         }).size() <= 1;
}

bool is_3connected(const Matroid& m) {
  const int n = m.size();
  if (n < 4 || !is_connected(m)) return false;
  const auto t = m.rank_table();
  const ElementSet all = m.ground();
  // Every partition is visited once with element 0 on the X side.
  for (ElementSet::Bits x = 1; x < all.bits(); x += 2) {
    const ElementSet side(x);
    const ElementSet other = side.complement(n);
    if (side.size() < 2 || other.size() < 2) continue;
    if (t[side.bits()] + t[other.bits()] - m.rank() <= 1) return false;
  }
  return true;
}

bool satisfies_basis_exchange(int n, const std::vector<ElementSet>& bases) {
  if (bases.empty()) return false;
  std::unordered_set<ElementSet> family(bases.begin(), bases.end());
  const int r = bases.front().size();
  for (ElementSet b : bases) {
    if (!b.within(n) || b.size() != r) return false;
  }
  for (ElementSet b1 : bases) {
    for (ElementSet b2 : bases) {
      for (int x : b1 - b2) {
        bool found = false;
        for (int y : b2 - b1) {
          if (family.contains(b1.without(x).with(y))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace pkit
