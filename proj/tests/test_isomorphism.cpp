#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "positroidkit/constructions.hpp"
#include "positroidkit/isomorphism.hpp"

using namespace pkit;

TEST_CASE("isomorphism examples") {
  const Matroid m6 = catalog(CatalogId::kM6);
  const auto self = are_isomorphic(m6, m6);
  REQUIRE(self);
  CHECK(is_isomorphism(m6, m6, self->mapping));

  CHECK_FALSE(are_isomorphic(catalog(CatalogId::kM4), whirl_like(3, 3)));
  CHECK(catalog(CatalogId::kM4).bases().size() + 1 == whirl_like(3, 3).bases().size());

  std::mt19937_64 rng(3);
  const Matroid u24 = uniform(2, 4);
  for (int t = 0; t < 10; ++t) {
    const std::vector<int> p = oracle::random_permutation(4, rng);
    const auto cert = are_isomorphic(u24, relabel(u24, p));
    REQUIRE(cert);
    CHECK(is_isomorphism(u24, relabel(u24, p), cert->mapping));
  }
}

TEST_CASE("canonical form is a complete invariant under relabelling") {
  std::mt19937_64 rng(5);
  for (const Matroid& m : oracle::small_corpus()) {
    const std::string form = canonical_form(m);
    for (int t = 0; t < 4; ++t) {
      const std::vector<int> p = oracle::random_permutation(m.size(), rng);
      const Matroid q = relabel(m, p);
      CHECK(canonical_form(q) == form);
      CHECK(invariant_key(q) == invariant_key(m));
      const auto cert = are_isomorphic(m, q);
      REQUIRE(cert);
      CHECK(is_isomorphism(m, q, cert->mapping));
    }
    const CanonicalLabeling lab = canonical_labeling(m);
    CHECK(canonical_form(relabel(m, lab.position)) == form);
  }
}

TEST_CASE("distinct classes get distinct forms") {
  // all_matroids(n) is one per class; forms and certificates must agree.
  for (int n = 1; n <= 5; ++n) {
    const std::vector<Matroid> classes = all_matroids(n);
    std::map<std::string, int> seen;
    for (const Matroid& m : classes) ++seen[canonical_form(m)];
    CHECK(seen.size() == classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        CHECK_FALSE(are_isomorphic(classes[i], classes[j]));
      }
    }
  }
}

TEST_CASE("certificate check rejects wrong maps") {
  const Matroid p3 = extremal_family(3, 2);
  std::vector<int> swap_hub = {0, 1, 3, 2, 4};
  CHECK_FALSE(is_isomorphism(p3, p3, swap_hub));
  std::vector<int> mirror = {4, 3, 2, 1, 0};
  CHECK(is_isomorphism(p3, p3, mirror));
}
