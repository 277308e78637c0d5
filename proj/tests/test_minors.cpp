#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "positroidkit/constructions.hpp"
#include "positroidkit/errors.hpp"
#include "positroidkit/isomorphism.hpp"
#include "positroidkit/minors.hpp"
#include "positroidkit/positroid.hpp"

using namespace pkit;

TEST_CASE("has_minor examples") {
  const Matroid m6 = catalog(CatalogId::kM6);
  const auto self = has_minor(m6, m6);
  REQUIRE(self);
  CHECK(self->contracted.empty());
  CHECK(self->deleted.empty());
  CHECK(is_valid_minor_witness(m6, m6, *self));

  CHECK_FALSE(has_minor(uniform(2, 4), catalog(CatalogId::kM4)));
  CHECK_FALSE(has_minor(catalog(CatalogId::kM3), catalog(CatalogId::kM2)));

  // Single-element deletion: found with one deleted element.
  const auto w = has_minor(catalog(CatalogId::kM6), deletion(catalog(CatalogId::kM6),
                                                             ElementSet{3}));
  REQUIRE(w);
  CHECK(w->contracted.empty());
  CHECK(w->deleted.size() == 1);
}

TEST_CASE("witnesses are validated literally") {
  const Matroid host = catalog(CatalogId::kM1);
  const Matroid target = uniform(2, 4);
  const auto w = has_minor(host, target);
  REQUIRE(w);
  CHECK(is_valid_minor_witness(host, target, *w));
  MinorWitness bad = *w;
  bad.deleted = bad.deleted | bad.contracted;
  CHECK_FALSE(is_valid_minor_witness(host, target, bad));
  MinorWitness wrong_map = *w;
  std::swap(wrong_map.iso.mapping[0], wrong_map.iso.mapping[1]);
  // U_{2,4} is fully symmetric, so any bijection still works.
  CHECK(is_valid_minor_witness(host, target, wrong_map));
}

TEST_CASE("independent contraction sets suffice") {
  std::vector<Matroid> hosts;
  for (int n = 1; n <= 5; ++n) {
    for (Matroid& m : all_matroids(n)) hosts.push_back(std::move(m));
  }
  hosts.push_back(catalog(CatalogId::kM4));
  std::vector<Matroid> targets;
  for (int n = 1; n <= 4; ++n) {
    for (Matroid& m : all_matroids(n)) targets.push_back(std::move(m));
  }
  for (const Matroid& m : hosts) {
    for (const Matroid& n : targets) {
      if (n.size() > m.size()) continue;
      const auto fast = has_minor(m, n);
      const auto slow = has_minor_unrestricted(m, n);
      REQUIRE(fast.has_value() == slow.has_value());
      if (fast) CHECK(is_valid_minor_witness(m, n, *fast));
      if (slow) CHECK(is_valid_minor_witness(m, n, *slow));
    }
  }
}

TEST_CASE("uniform line minor examples") {
  CHECK(has_uniform_line_minor(uniform(2, 4), 4));
  CHECK_FALSE(has_uniform_line_minor(extremal_family(3, 2), 4));
  CHECK_FALSE(has_uniform_line_minor(catalog(CatalogId::kM4), 4));
  CHECK(has_uniform_line_minor(uniform(3, 4), 3));
  CHECK_FALSE(has_uniform_line_minor(uniform(1, 3), 2));
  CHECK_THROWS_AS(uniform_line_minor_witness(uniform(2, 4), 1), Error);
}

TEST_CASE("uniform line test agrees with generic minor search") {
  for (const Matroid& m : oracle::small_corpus()) {
    for (int k = 3; k <= 5; ++k) {
      const bool fast = has_uniform_line_minor(m, k);
      const auto generic = has_minor(m, uniform(2, k));
      CHECK(fast == generic.has_value());
      const auto w = uniform_line_minor_witness(m, k);
      CHECK(w.has_value() == fast);
      if (w) CHECK(is_valid_minor_witness(m, uniform(2, k), *w));
    }
  }
}

TEST_CASE("minor relation is transitive on chains") {
  std::mt19937_64 rng(29);
  const Matroid host = catalog(CatalogId::kM2);
  const Matroid target = uniform(2, 4);
  Matroid current = host;
  while (current.size() > 5) {
    const auto w = has_minor(current, target);
    REQUIRE(w);
    const int e = static_cast<int>(rng() % current.size());
    const Matroid smaller = rng() % 2 ? deletion(current, ElementSet::single(e))
                                      : contraction(current, ElementSet::single(e));
    if (has_minor(smaller, target)) {
      CHECK(has_minor(current, target));
      CHECK(has_minor(host, smaller).has_value());
    }
    current = smaller;
  }
}

TEST_CASE("three-point line hypothesis detector") {
  const auto m1 = prop31_hypothesis(catalog(CatalogId::kM1));
  REQUIRE(m1);
  CHECK(m1->line == ElementSet{0, 1, 2});
  CHECK_FALSE(prop31_hypothesis(extremal_family(3, 4)));
  CHECK_FALSE(prop31_hypothesis(uniform(3, 6)));
  CHECK_THROWS_AS(prop31_hypothesis(uniform(2, 4)), Error);
  CHECK_THROWS_AS(prop31_hypothesis(catalog(CatalogId::kFig2)), Error);
  // Oracle: the returned points really are on at least two long lines.
  for (CatalogId id : {CatalogId::kM1, CatalogId::kM2, CatalogId::kM3}) {
    const Matroid m = catalog(id);
    const auto w = prop31_hypothesis(m);
    REQUIRE(w);
    const auto lines = long_lines(m);
    for (int p : w->points) {
      CHECK(w->line.contains(p));
      int through = 0;
      for (ElementSet l : lines) through += l.contains(p) ? 1 : 0;
      CHECK(through >= 2);
    }
  }
}

TEST_CASE("three-planes hypothesis detector") {
  const Matroid fig2 = catalog(CatalogId::kFig2);
  const auto w = prop32_hypothesis(fig2);
  REQUIRE(w);
  CHECK(w->line == ElementSet{0, 1, 2});
  const std::vector<ElementSet> li = {ElementSet{0, 3, 4}, ElementSet{1, 5, 6},
                                      ElementSet{2, 7, 8}};
  for (int i = 0; i < 3; ++i) {
    CHECK(fig2.rank_of(w->planes[i]) == 3);
    CHECK(w->line.subset_of(w->planes[i]));
    const int e = w->points[i];
    CHECK(w->planes[i] == (w->line | li[e]));
  }
  CHECK_FALSE(prop32_hypothesis(uniform(4, 6)));
  CHECK_FALSE(prop32_hypothesis(extremal_family(4, 2)));
  CHECK_THROWS_AS(prop32_hypothesis(uniform(3, 6)), Error);
}

TEST_CASE("catalog minor search") {
  for (CatalogId id : kAllCatalogIds) {
    const auto found = find_catalog_minor(catalog(id));
    REQUIRE(found);
    CHECK(found->id == id);
    CHECK(is_valid_minor_witness(catalog(id), catalog(id), found->witness));
  }
  CHECK_FALSE(find_catalog_minor(extremal_family(5, 2)));
  CHECK_FALSE(find_catalog_minor(whirl_like(3, 5)));
  // A non-positroid on more elements still reports a valid witness.
  const Matroid bigger = principal_extension(catalog(CatalogId::kM4),
                                             catalog(CatalogId::kM4).ground());
  const auto found = find_catalog_minor(bigger);
  REQUIRE(found);
  CHECK(is_valid_minor_witness(bigger, catalog(found->id), found->witness));
  CHECK_FALSE(is_positroid(bigger));
}
