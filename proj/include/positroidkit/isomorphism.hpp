#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "positroidkit/matroid.hpp"

namespace pkit {

/// Bijection between two ground sets: mapping[e] is the image of e.
struct IsoCertificate {
  std::vector<int> mapping;
};

struct CanonicalLabeling {
  /// position[e] is the canonical label of element e.
  std::vector<int> position;
  /// Byte string identifying the isomorphism class.
  std::string form;
};

/// Canonical labelling by individualisation-refinement over the
/// element/flat incidence structure, with automorphism pruning.
CanonicalLabeling canonical_labeling(const Matroid& m);

/// Equal for two matroids iff they are isomorphic.
std::string canonical_form(const Matroid& m);

/// Cheap isomorphism invariant: size, rank, basis count, sorted element
/// degrees in the basis family and the flat-size profile per rank.
std::string invariant_key(const Matroid& m);

/// True iff mapping carries the basis family of `from` exactly onto that of
/// `to`.
bool is_isomorphism(const Matroid& from, const Matroid& to,
                    std::span<const int> mapping);

std::optional<IsoCertificate> are_isomorphic(const Matroid& a,
                                             const Matroid& b);

}  // namespace pkit
