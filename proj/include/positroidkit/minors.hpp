#pragma once

#include <array>
#include <optional>
#include <vector>

#include "positroidkit/constructions.hpp"
#include "positroidkit/isomorphism.hpp"
#include "positroidkit/matroid.hpp"

namespace pkit {

/// host / contracted \ deleted, relabelled 0.. in increasing order and then
/// by `iso`, equals the target.
struct MinorWitness {
  ElementSet contracted;
  ElementSet deleted;
  IsoCertificate iso;
};

/// Checks the witness literally against host and target.
bool is_valid_minor_witness(const Matroid& host, const Matroid& target,
                            const MinorWitness& w);

/// Searches for N as a minor of M up to isomorphism. Contraction sets range
/// over independent sets of size r(M) - r(N); deletion sets are pruned by
/// cheap invariants before an isomorphism test.
std::optional<MinorWitness> has_minor(const Matroid& m, const Matroid& n);

/// Reference search over every disjoint pair (C, D). Exponential in 3^n;
/// only for cross-checking on tiny ground sets.
std::optional<MinorWitness> has_minor_unrestricted(const Matroid& m,
                                                   const Matroid& n);

/// True iff M has a U_{2,k} minor: some flat of corank 2 is covered by at
/// least k hyperplanes (or r(M) = 2 and M has at least k points).
bool has_uniform_line_minor(const Matroid& m, int k);

/// A U_{2,k} minor read off the flat scan: contract a basis of the corank-2
/// flat F, keep one element of H - F for k hyperplanes H covering F, delete
/// the rest. Throws Error(kInvalidParameters) if k < 2.
std::optional<MinorWitness> uniform_line_minor_witness(const Matroid& m, int k);

struct Prop31Witness {
  ElementSet line;
  std::array<int, 3> points;
};

/// Simple rank-3 M: a long line with three points each on at least two long
/// lines. Throws Error(kInvalidInput) for the wrong rank or a non-simple M.
std::optional<Prop31Witness> prop31_hypothesis(const Matroid& m);

struct Prop32Witness {
  ElementSet line;
  std::array<int, 3> points;
  std::array<ElementSet, 3> planes;
};

/// Simple rank-4 M: a line L, three distinct points e_i on L and three
/// distinct planes P_i through L with e_i on at least two long lines inside
/// P_i. Throws Error(kInvalidInput) for the wrong rank or a non-simple M.
std::optional<Prop32Witness> prop32_hypothesis(const Matroid& m);

struct CatalogMinor {
  CatalogId id;
  MinorWitness witness;
};

/// First catalog entry (in kCatalogSearchOrder) that is a minor of M.
std::optional<CatalogMinor> find_catalog_minor(const Matroid& m);

}  // namespace pkit
