#include "positroidkit/positroid.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include "positroidkit/errors.hpp"
#include "positroidkit/isomorphism.hpp"
#include "positroidkit/minors.hpp"

namespace pkit {
namespace {

void require_connected(const Matroid& m) {
  if (!is_connected(m)) {
    throw Error(ErrorKind::kInvalidInput, "matroid is not connected");
  }
}

bool is_cyclic_interval(ElementSet s, std::span<const int> order) {
  const std::size_t n = order.size();
  int boundaries = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.contains(order[i]) != s.contains(order[(i + 1) % n])) ++boundaries;
  }
  return boundaries <= 2;
}

class IntervalSearch {
 public:
  IntervalSearch(int n, const std::vector<ElementSet>& flats) : n_(n) {
    const ElementSet all = ElementSet::full(n);
    // With 0 first, F is a cyclic interval iff whichever of F, E-F avoids 0
    // is a contiguous block.
    for (ElementSet f : flats) {
      const ElementSet block = f.contains(0) ? all - f : f;
      if (block.size() >= 2 && block.size() <= n - 2) blocks_.push_back(block);
    }
    std::sort(blocks_.begin(), blocks_.end());
    blocks_.erase(std::unique(blocks_.begin(), blocks_.end()), blocks_.end());
  }

  std::optional<CyclicOrdering> run() {
    order_.assign(1, 0);
    if (place(ElementSet::single(0), 0)) return order_;
    return std::nullopt;
  }

 private:
  bool place(ElementSet placed, int last) {
    if (placed.size() == n_) return true;
    ElementSet candidates = ElementSet::full(n_) - placed;
    for (ElementSet b : blocks_) {
      const ElementSet seen = b & placed;
      if (!seen.empty() && b.contains(last) && seen != b) candidates &= b;
    }
    for (int x : candidates) {
      bool ok = true;
      for (ElementSet b : blocks_) {
        // A block that was entered and then left cannot be re-entered.
        if (b.contains(x) && !(b & placed).empty() && !b.contains(last)) {
          ok = false;
          break;
        }
        // Leaving an unfinished block is fatal.
        if (!b.contains(x) && b.contains(last) && !b.subset_of(placed)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      order_.push_back(x);
      if (place(placed.with(x), x)) return true;
      order_.pop_back();
    }
    return false;
  }

  int n_;
  std::vector<ElementSet> blocks_;
  CyclicOrdering order_;
};

ElementSet rotate(ElementSet s, int shift, int n) {
  if (shift == 0 || n == 0) return s;
  const ElementSet::Bits b = s.bits();
  return ElementSet(((b >> shift) | (b << (n - shift))) & ElementSet::full(n).bits());
}

// B >= I in the Gale order after rotating i to position 0: every prefix of
// the rotated order holds no more of B than of I.
bool gale_dominates(ElementSet b, ElementSet term, int shift, int n) {
  const ElementSet rb = rotate(b, shift, n);
  const ElementSet ri = rotate(term, shift, n);
  for (int t = 1; t < n; ++t) {
    const ElementSet prefix = ElementSet::full(t);
    if ((rb & prefix).size() > (ri & prefix).size()) return false;
  }
  return true;
}

// Position of j in the order i < i+1 < ... (mod n).
int shifted(int j, int i, int n) { return (j - i + n) % n; }

}  // namespace

std::vector<ElementSet> relevant_flats(const Matroid& m) {
  require_connected(m);
  std::vector<ElementSet> out;
  const ElementSet all = m.ground();
  for (ElementSet f : flat_lattice(m).all()) {
    if (f.empty() || f == all) continue;
    if (restriction_connected(m, f) && contraction_connected(m, f)) out.push_back(f);
  }
  return out;
}

std::optional<CyclicOrdering> bonin_check(const Matroid& m) {
  const auto flats = relevant_flats(m);
  if (m.size() <= 1) return CyclicOrdering(m.size() == 1 ? 1 : 0, 0);
  return IntervalSearch(m.size(), flats).run();
}

bool is_bonin_witness(const Matroid& m, std::span<const int> order) {
  const int n = m.size();
  if (static_cast<int>(order.size()) != n) return false;
  ElementSet seen;
  for (int e : order) {
    if (e < 0 || e >= n || seen.contains(e)) return false;
    seen = seen.with(e);
  }
  const ElementSet all = m.ground();
  for (ElementSet::Bits bits = 1; bits < all.bits(); ++bits) {
    const ElementSet f(bits);
    if (m.closure(f) != f) continue;
    if (components(restriction(m, f)).size() != 1) continue;
    if (components(contraction(m, f)).size() != 1) continue;
    if (!is_cyclic_interval(f, order)) return false;
  }
  return true;
}

bool is_positroid(const Matroid& m) {
  for (ElementSet part : components(m)) {
    if (part.size() <= 1) continue;
    if (!bonin_check(restriction(m, part))) return false;
  }
  return true;
}

bool is_valid_decorated_permutation(const DecoratedPermutation& dp) {
  const int n = static_cast<int>(dp.perm.size());
  if (n > kMaxGround || static_cast<int>(dp.fixed_kind.size()) != n) return false;
  ElementSet image;
  for (int x : dp.perm) {
    if (x < 0 || x >= n || image.contains(x)) return false;
    image = image.with(x);
  }
  return true;
}

bool is_valid_necklace(const GrassmannNecklace& necklace) {
  const int n = necklace.n;
  if (n < 0 || n > kMaxGround || static_cast<int>(necklace.terms.size()) != n) {
    return false;
  }
  if (n == 0) return true;
  const int r = necklace.terms[0].size();
  for (int i = 0; i < n; ++i) {
    const ElementSet term = necklace.terms[i];
    const ElementSet next = necklace.terms[(i + 1) % n];
    if (!term.within(n) || term.size() != r) return false;
    if (!term.without(i).subset_of(next)) return false;
  }
  return true;
}

GrassmannNecklace necklace_from_decorated_permutation(const DecoratedPermutation& dp) {
  if (!is_valid_decorated_permutation(dp)) {
    throw Error(ErrorKind::kInvalidParameters, "not a decorated permutation");
  }
  const int n = static_cast<int>(dp.perm.size());
  std::vector<int> inverse(n);
  for (int j = 0; j < n; ++j) inverse[dp.perm[j]] = j;
  GrassmannNecklace out;
  out.n = n;
  out.terms.resize(n);
  for (int i = 0; i < n; ++i) {
    ElementSet term;
    for (int j = 0; j < n; ++j) {
      const bool member =
          dp.perm[j] == j ? dp.fixed_kind[j] == FixedPointKind::kColoop
                          : shifted(j, i, n) < shifted(inverse[j], i, n);
      if (member) term = term.with(j);
    }
    out.terms[i] = term;
  }
  return out;
}

Matroid positroid_from_necklace(const GrassmannNecklace& necklace) {
  if (!is_valid_necklace(necklace) || necklace.n == 0) {
    throw Error(ErrorKind::kInvalidNecklace, "not a Grassmann necklace");
  }
  const int n = necklace.n;
  const int r = necklace.terms[0].size();
  std::vector<ElementSet> bases;
  for (ElementSet b : k_subsets(n, r)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = gale_dominates(b, necklace.terms[i], i, n);
    if (ok) bases.push_back(b);
  }
  return Matroid::from_bases_trusted(n, std::move(bases));
}

GrassmannNecklace necklace_of(const Matroid& m) {
  const int n = m.size();
  GrassmannNecklace out;
  out.n = n;
  for (int i = 0; i < n; ++i) {
    ElementSet basis;
    int r = 0;
    for (int step = 0; step < n; ++step) {
      const int e = (i + step) % n;
      if (m.rank_of(basis.with(e)) > r) {
        basis = basis.with(e);
        ++r;
      }
    }
    out.terms.push_back(basis);
  }
  return out;
}

PositroidEnumeration enumerate_positroids(int n, const PositroidFilters& filters,
                                          int threads) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw Error(ErrorKind::kCapExceeded,
                "exhaustive positroid enumeration supports 1 <= n <= " +
                    std::to_string(kMaxEnumerationSize) + ", got n = " +
                    std::to_string(n));
  }
  threads = std::clamp(threads, 1, n);

  struct Partial {
    std::map<std::string, Matroid> classes;
    std::size_t scanned = 0;
    std::size_t matches = 0;
  };
  std::vector<Partial> partials(n);

  auto accept = [&](const Matroid& m) {
    if (filters.simple && !m.is_simple()) return false;
    if (filters.connected && !is_connected(m)) return false;
    if (filters.three_connected && !is_3connected(m)) return false;
    if (filters.no_line_minor && has_uniform_line_minor(m, *filters.no_line_minor)) {
      return false;
    }
    return true;
  };

  // Partition by the image of element 0.
  auto run_partition = [&](int head) {
    Partial& part = partials[head];
    std::vector<int> rest;
    for (int x = 0; x < n; ++x) {
      if (x != head) rest.push_back(x);
    }
    DecoratedPermutation dp;
    dp.perm.resize(n);
    dp.fixed_kind.assign(n, FixedPointKind::kLoop);
    do {
      dp.perm[0] = head;
      std::copy(rest.begin(), rest.end(), dp.perm.begin() + 1);
      std::vector<int> fixed;
      for (int i = 0; i < n; ++i) {
        if (dp.perm[i] == i) fixed.push_back(i);
      }
      const int decorations = 1 << fixed.size();
      for (int mask = 0; mask < decorations; ++mask) {
        ++part.scanned;
        bool has_loop = false;
        for (std::size_t k = 0; k < fixed.size(); ++k) {
          const bool coloop = (mask >> k) & 1;
          dp.fixed_kind[fixed[k]] = coloop ? FixedPointKind::kColoop : FixedPointKind::kLoop;
          has_loop = has_loop || !coloop;
        }
        if (filters.simple && has_loop) continue;
        const GrassmannNecklace necklace = necklace_from_decorated_permutation(dp);
        if (filters.rank && necklace.terms[0].size() != *filters.rank) continue;
        Matroid m = positroid_from_necklace(necklace);
        if (!accept(m)) continue;
        ++part.matches;
        std::string form = canonical_form(m);
        part.classes.emplace(std::move(form), std::move(m));
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  };

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int head = next++; head < n; head = next++) run_partition(head);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<std::string, Matroid> merged;
  PositroidEnumeration out;
  for (auto& part : partials) {
    out.decorated_permutations += part.scanned;
    out.labelled_matches += part.matches;
    merged.merge(part.classes);
  }
  for (auto& [form, m] : merged) out.classes.push_back(std::move(m));
  return out;
}

}  // namespace pkit
