#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "positroidkit/constructions.hpp"
#include "positroidkit/errors.hpp"
#include "positroidkit/isomorphism.hpp"
#include "positroidkit/minors.hpp"
#include "positroidkit/positroid.hpp"

using namespace pkit;

namespace {

std::vector<DecoratedPermutation> all_decorated_permutations(int n) {
  std::vector<DecoratedPermutation> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> fixed;
    for (int i = 0; i < n; ++i) {
      if (perm[i] == i) fixed.push_back(i);
    }
    for (std::uint32_t mask = 0; mask < (1U << fixed.size()); ++mask) {
      DecoratedPermutation dp{perm, std::vector<FixedPointKind>(n, FixedPointKind::kLoop)};
      for (std::size_t k = 0; k < fixed.size(); ++k) {
        if ((mask >> k) & 1U) dp.fixed_kind[fixed[k]] = FixedPointKind::kColoop;
      }
      out.push_back(dp);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Gale order for the order i < i+1 < ... : sort both sets and compare termwise.
bool gale_at_least(ElementSet b, ElementSet bound, int shift, int n) {
  auto key = [&](int e) { return (e - shift + n) % n; };
  std::vector<int> x, y;
  for (int e : b) x.push_back(key(e));
  for (int e : bound) y.push_back(key(e));
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] < y[k]) return false;
  }
  return true;
}

std::vector<ElementSet> gale_bases(const GrassmannNecklace& necklace) {
  const int n = necklace.n;
  const int r = necklace.terms[0].size();
  std::vector<ElementSet> out;
  for (ElementSet b : k_subsets(n, r)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = gale_at_least(b, necklace.terms[i], i, n);
    if (ok) out.push_back(b);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Relevant flats straight from the definition, via the basis oracle.
std::vector<ElementSet> oracle_relevant_flats(const Matroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet f : oracle::flats(m)) {
    if (f.empty() || f == m.ground()) continue;
    const Matroid rest =
        Matroid::from_bases_trusted(f.size(), oracle::minor_bases(m, {}, m.ground() - f));
    const Matroid con = Matroid::from_bases_trusted(m.size() - f.size(),
                                                    oracle::minor_bases(m, f, {}));
    if (oracle::connected(rest) && oracle::connected(con)) out.push_back(f);
  }
  return out;
}

std::set<std::string> forms_of(const std::vector<Matroid>& ms) {
  std::set<std::string> out;
  for (const Matroid& m : ms) out.insert(canonical_form(m));
  return out;
}

}  // namespace

TEST_CASE("decorated permutation to necklace examples") {
  DecoratedPermutation shift{{2, 3, 0, 1}, std::vector<FixedPointKind>(4)};
  const GrassmannNecklace nk = necklace_from_decorated_permutation(shift);
  REQUIRE(nk.terms.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(nk.terms[i] == ElementSet{i, (i + 1) % 4});
  CHECK(positroid_from_necklace(nk) == uniform(2, 4));

  for (int n = 1; n <= 6; ++n) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    const GrassmannNecklace free = necklace_from_decorated_permutation(
        {id, std::vector<FixedPointKind>(n, FixedPointKind::kColoop)});
    for (ElementSet t : free.terms) CHECK(t == ElementSet::full(n));
    CHECK(positroid_from_necklace(free) == uniform(n, n));
    const GrassmannNecklace none = necklace_from_decorated_permutation(
        {id, std::vector<FixedPointKind>(n, FixedPointKind::kLoop)});
    for (ElementSet t : none.terms) CHECK(t.empty());
    CHECK(positroid_from_necklace(none).rank() == 0);
  }
}

TEST_CASE("invalid codes are rejected") {
  CHECK_FALSE(is_valid_decorated_permutation({{0, 0}, std::vector<FixedPointKind>(2)}));
  CHECK_FALSE(is_valid_decorated_permutation({{1, 0}, std::vector<FixedPointKind>(1)}));
  CHECK_THROWS_AS(necklace_from_decorated_permutation({{0, 2}, std::vector<FixedPointKind>(2)}),
                  Error);
  const GrassmannNecklace bad{3, {ElementSet{0}, ElementSet{2}, ElementSet{1, 2}}};
  CHECK_FALSE(is_valid_necklace(bad));
  CHECK_THROWS_AS(positroid_from_necklace(bad), Error);
  // I_1 must contain I_0 - {0}.
  const GrassmannNecklace broken{3, {ElementSet{1}, ElementSet{2}, ElementSet{2}}};
  CHECK_FALSE(is_valid_necklace(broken));
}

TEST_CASE("necklaces match the Gale oracle and round trip") {
  for (int n = 1; n <= 6; ++n) {
    for (const DecoratedPermutation& dp : all_decorated_permutations(n)) {
      const GrassmannNecklace nk = necklace_from_decorated_permutation(dp);
      REQUIRE(is_valid_necklace(nk));
      const Matroid m = positroid_from_necklace(nk);
      REQUIRE(m.bases() == gale_bases(nk));
      CHECK(m.is_basis(nk.terms[0]));
      const GrassmannNecklace back = necklace_of(m);
      CHECK(back.terms == nk.terms);
      if (n <= 5) CHECK(satisfies_basis_exchange(n, m.bases()));
    }
  }
}

TEST_CASE("constant necklaces") {
  for (int n = 3; n <= 6; ++n) {
    for (int r = 1; r < n; ++r) {
      for (ElementSet b0 : k_subsets(n, r)) {
        const GrassmannNecklace nk{n, std::vector<ElementSet>(n, b0)};
        REQUIRE(is_valid_necklace(nk));
        const Matroid m = positroid_from_necklace(nk);
        CHECK(m.rank() == r);
        CHECK(is_positroid(m));
        CHECK(necklace_of(m).terms == nk.terms);
      }
    }
  }
}

TEST_CASE("relevant flats examples") {
  for (int l = 3; l <= 6; ++l) {
    std::vector<ElementSet> expect;
    for (int e = 0; e < l; ++e) expect.push_back(ElementSet::single(e));
    std::vector<ElementSet> got = relevant_flats(uniform(2, l));
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
  }
  const auto p3 = relevant_flats(extremal_family(3, 2));
  CHECK(std::count(p3.begin(), p3.end(), ElementSet{0, 1, 2}) == 1);
  CHECK(std::count(p3.begin(), p3.end(), ElementSet{2, 3, 4}) == 1);

  const Matroid m4 = catalog(CatalogId::kM4);
  std::vector<ElementSet> got = relevant_flats(m4);
  std::vector<ElementSet> expect = long_lines(m4);
  for (int e = 0; e < 6; ++e) expect.push_back(ElementSet::single(e));
  std::sort(got.begin(), got.end());
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);

  CHECK_THROWS_AS(relevant_flats(direct_sum(uniform(1, 1), uniform(1, 1))), Error);
  CHECK_THROWS_AS(bonin_check(direct_sum(uniform(1, 1), uniform(1, 1))), Error);

  for (const Matroid& m : oracle::small_corpus()) {
    if (!is_connected(m) || m.size() > 8) continue;
    std::vector<ElementSet> a = relevant_flats(m);
    std::vector<ElementSet> b = oracle_relevant_flats(m);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("Bonin check examples") {
  const auto u24 = bonin_check(uniform(2, 4));
  REQUIRE(u24);
  CHECK(u24->size() == 4);
  CHECK_FALSE(bonin_check(catalog(CatalogId::kM4)));
  const auto p3 = bonin_check(extremal_family(3, 2));
  REQUIRE(p3);
  CHECK(is_bonin_witness(extremal_family(3, 2), std::vector<int>{0, 1, 2, 3, 4}));
  CHECK_FALSE(is_bonin_witness(extremal_family(3, 2), std::vector<int>{0, 3, 1, 2, 4}));
  CHECK(is_positroid(whirl_like(3, 5)));
  for (CatalogId id : kAllCatalogIds) CHECK_FALSE(is_positroid(catalog(id)));
  for (const Matroid& t : all_parallel_connection_trees(4, 2)) CHECK(is_positroid(t));
}

TEST_CASE("Bonin witnesses pass an independent interval check") {
  for (const Matroid& m : oracle::small_corpus()) {
    if (!is_connected(m) || m.size() > 8) continue;
    const auto order = bonin_check(m);
    if (!order) continue;
    CHECK(order->front() == 0);
    std::vector<int> sorted = *order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> iota(m.size());
    std::iota(iota.begin(), iota.end(), 0);
    CHECK(sorted == iota);
    CHECK(is_bonin_witness(m, *order));
    for (ElementSet f : oracle_relevant_flats(m)) CHECK(oracle::is_cyclic_interval(*order, f));
  }
}

TEST_CASE("Bonin rejections are exhaustive on small inputs") {
  // A rejected connected matroid has no valid cyclic order at all.
  for (int n = 4; n <= 6; ++n) {
    for (const Matroid& m : all_matroids(n)) {
      if (!is_connected(m)) continue;
      const bool found = bonin_check(m).has_value();
      const std::vector<ElementSet> flats = oracle_relevant_flats(m);
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      bool any = false;
      do {
        any = std::all_of(flats.begin(), flats.end(), [&](ElementSet f) {
          return oracle::is_cyclic_interval(order, f);
        });
      } while (!any && std::next_permutation(order.begin() + 1, order.end()));
      CHECK(found == any);
    }
  }
}

TEST_CASE("enumeration") {
  const auto one = enumerate_positroids(1, {});
  CHECK(one.classes.size() == 2);
  CHECK(one.decorated_permutations == 2);

  // Frozen after cross-checking against the corpus below.
  const std::vector<std::size_t> classes = {2, 4, 8, 17, 38, 97};
  const std::vector<std::size_t> perms = {2, 5, 16, 65, 326, 1957};
  for (int n = 1; n <= 6; ++n) {
    const auto e = enumerate_positroids(n, {});
    CHECK(e.classes.size() == classes[n - 1]);
    CHECK(e.decorated_permutations == perms[n - 1]);
    CHECK(e.labelled_matches == perms[n - 1]);
  }

  PositroidFilters simple2;
  simple2.rank = 2;
  simple2.simple = true;
  const auto r2 = enumerate_positroids(4, simple2);
  REQUIRE(r2.classes.size() == 1);
  CHECK(are_isomorphic(r2.classes[0], uniform(2, 4)));

  PositroidFilters thm;
  thm.rank = 3;
  thm.simple = true;
  thm.no_line_minor = 4;
  const auto five = enumerate_positroids(5, thm);
  REQUIRE(five.classes.size() == 1);
  CHECK(are_isomorphic(five.classes[0], extremal_family(3, 2)));

  CHECK_THROWS_AS(enumerate_positroids(10, {}), Error);
  CHECK_THROWS_AS(enumerate_positroids(0, {}), Error);
}

TEST_CASE("enumeration filters agree with direct predicates") {
  const auto all6 = enumerate_positroids(6, {});
  PositroidFilters f;
  f.connected = true;
  f.three_connected = true;
  f.no_line_minor = 5;
  const auto filtered = enumerate_positroids(6, f);
  std::vector<Matroid> expect;
  for (const Matroid& m : all6.classes) {
    if (is_connected(m) && is_3connected(m) && !has_uniform_line_minor(m, 5)) {
      expect.push_back(m);
    }
  }
  CHECK(forms_of(filtered.classes) == forms_of(expect));
}

TEST_CASE("enumeration is independent of the thread count") {
  PositroidFilters f;
  f.simple = true;
  const auto one = enumerate_positroids(7, f, 1);
  const auto three = enumerate_positroids(7, f, 3);
  CHECK(one.decorated_permutations == three.decorated_permutations);
  CHECK(one.labelled_matches == three.labelled_matches);
  REQUIRE(one.classes.size() == three.classes.size());
  for (std::size_t i = 0; i < one.classes.size(); ++i) {
    CHECK(one.classes[i] == three.classes[i]);
  }
}

TEST_CASE("oracle agreement on small ground sets") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Matroid> by_bonin;
    for (const Matroid& m : all_matroids(n)) {
      if (is_positroid(m)) by_bonin.push_back(m);
    }
    const auto e = enumerate_positroids(n, {});
    CHECK(forms_of(e.classes) == forms_of(by_bonin));
    for (const Matroid& m : e.classes) CHECK(is_positroid(m));
  }
}

TEST_CASE("positroids are minor-closed") {
  for (int n = 2; n <= 6; ++n) {
    const auto result = enumerate_positroids(n, {});
    for (const Matroid& m : result.classes) {
      for (int e = 0; e < n; ++e) {
        CHECK(is_positroid(deletion(m, ElementSet::single(e))));
        CHECK(is_positroid(contraction(m, ElementSet::single(e))));
      }
    }
  }
}

TEST_CASE("positroids are closed under parallel connection") {
  std::vector<Matroid> pool;
  for (int n = 1; n <= 5; ++n) {
    auto result = enumerate_positroids(n, {});
    for (Matroid& m : result.classes) pool.push_back(std::move(m));
  }
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 150) {
    const Matroid& a = pool[rng() % pool.size()];
    const Matroid& b = pool[rng() % pool.size()];
    const int ea = static_cast<int>(rng() % a.size());
    const int eb = static_cast<int>(rng() % b.size());
    if (a.loops().contains(ea) || b.loops().contains(eb)) continue;
    ++checked;
    CHECK(is_positroid(parallel_connection(a, b, ea, eb)));
  }
}

TEST_CASE("disconnected matroids are checked componentwise") {
  CHECK(is_positroid(direct_sum(uniform(2, 4), uniform(1, 3))));
  CHECK_FALSE(is_positroid(direct_sum(catalog(CatalogId::kM4), uniform(1, 1))));
  CHECK(is_positroid(Matroid::from_bases(3, {ElementSet{}})));
}
