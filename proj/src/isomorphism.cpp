#include "positroidkit/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace pkit {
namespace {

using Encoding = std::vector<ElementSet::Bits>;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finaliser over a running combination
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Matroid& m) : m_(m), n_(m.size()) {
    const FlatLattice lattice = flat_lattice(m);
    for (int k = 0; k < static_cast<int>(lattice.by_rank.size()); ++k) {
      for (ElementSet f : lattice.by_rank[k]) {
        flats_.push_back(f);
        flat_rank_.push_back(k);
      }
    }
    containing_.resize(n_);
    for (int i = 0; i < static_cast<int>(flats_.size()); ++i) {
      for (int e : flats_[i]) containing_[e].push_back(i);
    }
  }

  CanonicalLabeling run() {
    std::vector<int> color(n_, 0);
    int cells = n_ == 0 ? 0 : refine(color, 1);
    std::vector<int> path;
    search(color, cells, path);
    CanonicalLabeling out;
    out.position = best_perm_;
    out.form.push_back(static_cast<char>(n_));
    out.form.push_back(static_cast<char>(m_.rank()));
    for (ElementSet::Bits b : best_) {
      out.form.push_back(static_cast<char>(b & 0xff));
      out.form.push_back(static_cast<char>((b >> 8) & 0xff));
    }
    return out;
  }

 private:
  static constexpr int kNoJump = -1;

  // Splits cells in place until the partition is stable under flat
  // incidence counts. Returns the number of cells.
  int refine(std::vector<int>& color, int cells) const {
    std::vector<std::uint64_t> flat_hash(flats_.size());
    std::vector<int> count(n_);
    std::vector<std::uint64_t> sig(n_);
    std::vector<int> order(n_);
    std::vector<std::uint64_t> scratch;
    while (true) {
      for (std::size_t i = 0; i < flats_.size(); ++i) {
        std::fill(count.begin(), count.begin() + cells, 0);
        for (int e : flats_[i]) ++count[color[e]];
        std::uint64_t h = mix(0x1234, static_cast<std::uint64_t>(flat_rank_[i]));
        for (int c = 0; c < cells; ++c) {
          if (count[c] != 0) h = mix(h, (static_cast<std::uint64_t>(c) << 8) | count[c]);
        }
        flat_hash[i] = h;
      }
      for (int e = 0; e < n_; ++e) {
        scratch.clear();
        for (int i : containing_[e]) scratch.push_back(flat_hash[i]);
        std::sort(scratch.begin(), scratch.end());
        std::uint64_t h = 0x5678;
        for (std::uint64_t v : scratch) h = mix(h, v);
        sig[e] = h;
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (color[a] != color[b]) return color[a] < color[b];
        return sig[a] < sig[b];
      });
      std::vector<int> next(n_);
      int id = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && (color[order[i]] != color[order[i - 1]] ||
                      sig[order[i]] != sig[order[i - 1]])) {
          ++id;
        }
        next[order[i]] = id;
      }
      const int next_cells = id + 1;
      color.swap(next);
      if (next_cells == cells) return cells;
      cells = next_cells;
    }
  }

  // v becomes a singleton cell just before the rest of its old cell; cell
  // order is otherwise kept, so a discrete colouring is a labelling.
  std::vector<int> individualize(const std::vector<int>& color, int v) const {
    std::vector<int> out(n_);
    for (int e = 0; e < n_; ++e) {
      out[e] = 2 * color[e] + ((color[e] == color[v] && e != v) ? 1 : 0);
    }
    std::vector<int> values(out);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : out) {
      c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) -
                           values.begin());
    }
    return out;
  }

  Encoding encode(const std::vector<int>& perm) const {
    Encoding enc;
    enc.reserve(m_.bases().size());
    for (ElementSet b : m_.bases()) {
      ElementSet::Bits image = 0;
      for (int e : b) image |= ElementSet::Bits{1} << perm[e];
      enc.push_back(image);
    }
    std::sort(enc.begin(), enc.end());
    return enc;
  }

  // Automorphism g with g(x) = element at position from[x] in `to`.
  std::vector<int> automorphism(const std::vector<int>& from,
                                const std::vector<int>& to) const {
    std::vector<int> inverse_to(n_);
    for (int e = 0; e < n_; ++e) inverse_to[to[e]] = e;
    std::vector<int> g(n_);
    for (int x = 0; x < n_; ++x) g[x] = inverse_to[from[x]];
    return g;
  }

  std::vector<int> orbit_roots(const std::vector<int>& path) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(),
                               [&](int v) { return g[v] == v; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(g[x]);
    }
    std::vector<int> roots(n_);
    for (int x = 0; x < n_; ++x) roots[x] = find(x);
    return roots;
  }

  int search(const std::vector<int>& color, int cells, std::vector<int>& path) {
    const int depth = static_cast<int>(path.size());
    if (cells == n_) return leaf(color, path);

    std::vector<int> size(cells, 0);
    for (int c : color) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;

    std::vector<int> explored;
    for (int v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      if (!explored.empty()) {
        const std::vector<int> roots = orbit_roots(path);
        bool equivalent = std::any_of(explored.begin(), explored.end(),
                                      [&](int w) { return roots[w] == roots[v]; });
        if (equivalent) continue;
      }
      std::vector<int> child = individualize(color, v);
      const int child_cells = refine(child, cells + 1);
      path.push_back(v);
      const int jump = search(child, child_cells, path);
      path.pop_back();
      explored.push_back(v);
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  int leaf(const std::vector<int>& perm, const std::vector<int>& path) {
    Encoding enc = encode(perm);
    if (first_perm_.empty()) {
      first_perm_ = perm;
      first_path_ = path;
      first_ = enc;
      best_perm_ = perm;
      best_ = std::move(enc);
      return kNoJump;
    }
    if (enc == first_) {
      automorphisms_.push_back(automorphism(first_perm_, perm));
      std::size_t common = 0;
      while (common < path.size() && common < first_path_.size() &&
             path[common] == first_path_[common]) {
        ++common;
      }
      return static_cast<int>(common);
    }
    if (enc < best_) {
      best_ = std::move(enc);
      best_perm_ = perm;
    } else if (enc == best_) {
      automorphisms_.push_back(automorphism(best_perm_, perm));
    }
    return kNoJump;
  }

  const Matroid& m_;
  int n_;
  std::vector<ElementSet> flats_;
  std::vector<int> flat_rank_;
  std::vector<std::vector<int>> containing_;

  std::vector<int> first_perm_;
  std::vector<int> first_path_;
  Encoding first_;
  std::vector<int> best_perm_;
  Encoding best_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Matroid& m) {
  if (m.size() == 0) {
    CanonicalLabeling out;
    out.form = std::string{'\0', '\0'};
    return out;
  }
  return CanonicalSearch(m).run();
}

std::string canonical_form(const Matroid& m) { return canonical_labeling(m).form; }

std::string invariant_key(const Matroid& m) {
  std::vector<int> degree(m.size(), 0);
  for (ElementSet b : m.bases()) {
    for (int e : b) ++degree[e];
  }
  std::sort(degree.begin(), degree.end());
  std::ostringstream key;
  key << m.size() << '/' << m.rank() << '/' << m.bases().size() << ':';
  for (int d : degree) key << d << ',';
  const FlatLattice lattice = flat_lattice(m);
  for (const auto& level : lattice.by_rank) {
    std::vector<int> sizes;
    for (ElementSet f : level) sizes.push_back(f.size());
    std::sort(sizes.begin(), sizes.end());
    key << '|';
    for (int s : sizes) key << s << ',';
  }
  return key.str();
}

bool is_isomorphism(const Matroid& from, const Matroid& to,
                    std::span<const int> mapping) {
  const int n = from.size();
  if (to.size() != n || static_cast<int>(mapping.size()) != n ||
      from.bases().size() != to.bases().size()) {
    return false;
  }
  std::vector<bool> hit(n, false);
  for (int x : mapping) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = true;
  }
  std::vector<ElementSet> image;
  image.reserve(from.bases().size());
  for (ElementSet b : from.bases()) {
    ElementSet s;
    for (int e : b) s = s.with(mapping[e]);
    image.push_back(s);
  }
  std::sort(image.begin(), image.end(), lex_less);
  return image == to.bases();
}

std::optional<IsoCertificate> are_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() ||
      a.bases().size() != b.bases().size()) {
    return std::nullopt;
  }
  if (invariant_key(a) != invariant_key(b)) return std::nullopt;
  const CanonicalLabeling ca = canonical_labeling(a);
  const CanonicalLabeling cb = canonical_labeling(b);
  if (ca.form != cb.form) return std::nullopt;
  const int n = a.size();
  std::vector<int> inverse_b(n);
  for (int e = 0; e < n; ++e) inverse_b[cb.position[e]] = e;
  IsoCertificate cert;
  cert.mapping.resize(n);
  for (int e = 0; e < n; ++e) cert.mapping[e] = inverse_b[ca.position[e]];
  return cert;
}

}  // namespace pkit
