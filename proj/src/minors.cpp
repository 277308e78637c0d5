#include "positroidkit/minors.hpp"

#include <algorithm>

#include "positroidkit/errors.hpp"

namespace pkit {
namespace {

std::vector<int> degree_sequence(const Matroid& m) {
  std::vector<int> degree(m.size(), 0);
  for (ElementSet b : m.bases()) {
    for (int e : b) ++degree[e];
  }
  std::sort(degree.begin(), degree.end());
  return degree;
}

struct TargetProfile {
  explicit TargetProfile(const Matroid& target)
      : matroid(target),
        labeling(canonical_labeling(target)),
        degrees(degree_sequence(target)),
        points(point_count(target)),
        lines(static_cast<int>(long_lines(target).size())) {}

  Matroid matroid;
  CanonicalLabeling labeling;
  std::vector<int> degrees;
  int points;
  int lines;
};

std::optional<IsoCertificate> match(const Matroid& candidate,
                                    const TargetProfile& target) {
  if (candidate.bases().size() != target.matroid.bases().size()) return std::nullopt;
  if (degree_sequence(candidate) != target.degrees) return std::nullopt;
  if (point_count(candidate) != target.points) return std::nullopt;
  if (static_cast<int>(long_lines(candidate).size()) != target.lines) {
    return std::nullopt;
  }
  const CanonicalLabeling c = canonical_labeling(candidate);
  if (c.form != target.labeling.form) return std::nullopt;
  const int n = candidate.size();
  std::vector<int> inverse(n);
  for (int e = 0; e < n; ++e) inverse[target.labeling.position[e]] = e;
  IsoCertificate cert;
  cert.mapping.resize(n);
  for (int e = 0; e < n; ++e) cert.mapping[e] = inverse[c.position[e]];
  return cert;
}

std::optional<MinorWitness> search_minor(const Matroid& m,
                                         const TargetProfile& target) {
  const Matroid& n = target.matroid;
  const int corank_m = m.size() - m.rank();
  const int corank_n = n.size() - n.rank();
  if (n.size() > m.size() || n.rank() > m.rank() || corank_n > corank_m) {
    return std::nullopt;
  }
  const int contract_size = m.rank() - n.rank();
  const int delete_size = m.size() - contract_size - n.size();
  const ElementSet all = m.ground();
  for (ElementSet c : k_subsets(m.size(), contract_size)) {
    if (!m.is_independent(c)) continue;
    const ElementSet rest = all - c;
    const std::vector<int> rest_elems = rest.to_vector();
    for (ElementSet pick : k_subsets(static_cast<int>(rest_elems.size()), delete_size)) {
      ElementSet d;
      for (int i : pick) d = d.with(rest_elems[i]);
      // M/C\D keeps full rank only if E - D spans M.
      if (m.rank_of(all - d) != m.rank()) continue;
      const Matroid candidate = minor(m, c, d);
      if (auto cert = match(candidate, target)) {
        return MinorWitness{c, d, std::move(*cert)};
      }
    }
  }
  return std::nullopt;
}

void require_simple_rank(const Matroid& m, int rank) {
  if (m.rank() != rank || !m.is_simple()) {
    throw Error(ErrorKind::kInvalidInput,
                "expected a simple rank-" + std::to_string(rank) + " matroid");
  }
}

const std::vector<TargetProfile>& catalog_profiles() {
  static const std::vector<TargetProfile> profiles = [] {
    std::vector<TargetProfile> out;
    for (CatalogId id : kCatalogSearchOrder) out.emplace_back(catalog(id));
    return out;
  }();
  return profiles;
}

}  // namespace

bool is_valid_minor_witness(const Matroid& host, const Matroid& target,
                            const MinorWitness& w) {
  if (!w.contracted.within(host.size()) || !w.deleted.within(host.size()) ||
      !(w.contracted & w.deleted).empty()) {
    return false;
  }
  const Matroid result = minor(host, w.contracted, w.deleted);
  return is_isomorphism(result, target, w.iso.mapping);
}

std::optional<MinorWitness> has_minor(const Matroid& m, const Matroid& n) {
  return search_minor(m, TargetProfile(n));
}

std::optional<MinorWitness> has_minor_unrestricted(const Matroid& m,
                                                   const Matroid& n) {
  if (n.size() > m.size()) return std::nullopt;
  const TargetProfile target(n);
  const int size = m.size();
  int total = 1;
  for (int i = 0; i < size; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    ElementSet c;
    ElementSet d;
    int rest = code;
    for (int e = 0; e < size; ++e) {
      const int role = rest % 3;
      rest /= 3;
      if (role == 1) c = c.with(e);
      if (role == 2) d = d.with(e);
    }
    if (size - c.size() - d.size() != n.size()) continue;
    const Matroid candidate = minor(m, c, d);
    if (candidate.rank() != n.rank()) continue;
    if (auto cert = match(candidate, target)) {
      return MinorWitness{c, d, std::move(*cert)};
    }
  }
  return std::nullopt;
}

bool has_uniform_line_minor(const Matroid& m, int k) {
  if (k < 2) throw Error(ErrorKind::kInvalidParameters, "line minor needs k >= 2");
  const int r = m.rank();
  if (r < 2) return false;
  const FlatLattice lattice = flat_lattice(m);
  const auto& hyperplanes = lattice.by_rank[r - 1];
  for (ElementSet f : lattice.by_rank[r - 2]) {
    int covers = 0;
    for (ElementSet h : hyperplanes) {
      if (f.subset_of(h)) ++covers;
    }
    if (covers >= k) return true;
  }
  return false;
}

std::optional<MinorWitness> uniform_line_minor_witness(const Matroid& m, int k) {
  if (k < 2) throw Error(ErrorKind::kInvalidParameters, "line minor needs k >= 2");
  const int r = m.rank();
  if (r < 2) return std::nullopt;
  const FlatLattice lattice = flat_lattice(m);
  for (ElementSet f : lattice.by_rank[r - 2]) {
    ElementSet keep;
    for (ElementSet h : lattice.by_rank[r - 1]) {
      if (f.subset_of(h) && keep.size() < k) keep = keep.with((h - f).first());
    }
    if (keep.size() < k) continue;
    const ElementSet contracted = m.greedy_basis(f);
    const ElementSet deleted = m.ground() - keep - contracted;
    IsoCertificate iso;
    for (int i = 0; i < k; ++i) iso.mapping.push_back(i);
    return MinorWitness{contracted, deleted, std::move(iso)};
  }
  return std::nullopt;
}

std::optional<Prop31Witness> prop31_hypothesis(const Matroid& m) {
  require_simple_rank(m, 3);
  const auto lines = long_lines(m);
  for (ElementSet line : lines) {
    std::vector<int> busy;
    for (int e : line) {
      const auto through = std::count_if(lines.begin(), lines.end(),
                                         [&](ElementSet l) { return l.contains(e); });
      if (through >= 2) busy.push_back(e);
    }
    if (busy.size() >= 3) return Prop31Witness{line, {busy[0], busy[1], busy[2]}};
  }
  return std::nullopt;
}

std::optional<Prop32Witness> prop32_hypothesis(const Matroid& m) {
  require_simple_rank(m, 4);
  const FlatLattice lattice = flat_lattice(m);
  const auto lines = long_lines(m);
  for (ElementSet line : lines) {
    std::vector<ElementSet> planes;
    for (ElementSet p : lattice.by_rank[3]) {
      if (line.subset_of(p)) planes.push_back(p);
    }
    // good[i] = points of `line` on a second long line inside planes[i]
    std::vector<ElementSet> good(planes.size());
    for (std::size_t i = 0; i < planes.size(); ++i) {
      for (ElementSet other : lines) {
        if (other != line && other.subset_of(planes[i])) good[i] |= other & line;
      }
    }
    for (std::size_t a = 0; a < planes.size(); ++a) {
      for (std::size_t b = a + 1; b < planes.size(); ++b) {
        for (std::size_t c = b + 1; c < planes.size(); ++c) {
          for (int x : good[a]) {
            for (int y : good[b]) {
              for (int z : good[c]) {
                if (x == y || y == z || x == z) continue;
                return Prop32Witness{line, {x, y, z}, {planes[a], planes[b], planes[c]}};
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<CatalogMinor> find_catalog_minor(const Matroid& m) {
  const auto& profiles = catalog_profiles();
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (auto w = search_minor(m, profiles[i])) {
      return CatalogMinor{kCatalogSearchOrder[i], std::move(*w)};
    }
  }
  return std::nullopt;
}

}  // namespace pkit
