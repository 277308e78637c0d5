#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "positroidkit/matroid.hpp"

namespace pkit {

/// Exact matrix entry num/den. den must be nonzero.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// Row-major; every row has the same length.
using ExactMatrix = std::vector<std::vector<Fraction>>;

/// Comma-separated rows of integers or p/q rationals. Blank lines and `#`
/// comments are skipped. Decimal points and exponents are rejected.
/// Throws Error(kParse) with the offending line number.
ExactMatrix parse_matrix_csv(std::string_view text);
ExactMatrix load_matrix_csv(const std::string& path);

/// Alternating sign map on r-tuples of {0..n-1}, stored on sorted tuples.
class Chirotope {
 public:
  /// `signs` lists the values on the r-subsets in lexicographic order
  /// (k_subsets order), as '+', '-' or '0'.
  /// Throws Error(kInvalidInput) on a length mismatch or bad character and
  /// Error(kNotAChirotope) if every sign is zero.
  static Chirotope from_sign_string(int n, int r, std::string_view signs);

  int size() const { return n_; }
  int rank() const { return r_; }

  /// Sign of the sorted tuple listing `s`; 0 unless |s| = r.
  int sign(ElementSet s) const;
  /// Sign of an arbitrary tuple; repeated entries give 0.
  int sign(std::span<const int> tuple) const;

  Chirotope negated() const;

  /// Signs on k_subsets(n, r) as '+', '-', '0'.
  std::string to_sign_string() const;

  friend bool operator==(const Chirotope&, const Chirotope&) = default;

 private:
  Chirotope(int n, int r, std::vector<std::int8_t> table)
      : n_(n), r_(r), table_(std::move(table)) {}

  friend Chirotope chirotope_from_table(int n, int r, std::vector<std::int8_t> table);

  int n_ = 0;
  int r_ = 0;
  std::vector<std::int8_t> table_;  // indexed by subset bits
};

/// Signs of the maximal minors, with exact integer arithmetic after each
/// column is scaled by the positive lcm of its denominators.
/// Throws Error(kInvalidMatrix) for ragged input, a zero denominator, more
/// than kMaxGround columns, or rank below the row count.
Chirotope chirotope_from_matrix(const ExactMatrix& a);

/// Bases are the support. Throws Error(kNotAChirotope) if the support
/// violates basis exchange.
Matroid underlying_matroid(const Chirotope& chi);

/// (x_1..x_{r-1}) -> chi(e, x_1..x_{r-1}) on E - e, relabelled 0.. in order.
/// Throws Error(kInvalidContraction) if e is a loop, Error(kInvalidSubset)
/// if e is out of range.
Chirotope oriented_contract(const Chirotope& chi, int e);

/// Restriction to E - e, relabelled. A coloop is contracted instead so that
/// the result matches the unoriented deletion.
Chirotope oriented_delete(const Chirotope& chi, int e);

/// chi(b_1..b_k, X) on E - B, for B independent and b_1 < .. < b_k.
/// Throws Error(kInvalidContraction) if B is dependent.
Chirotope oriented_contract_set(const Chirotope& chi, ElementSet b);

struct MonochromaticWitness {
  ElementSet flat;
  /// Increasing ground labels; every pair x < y has sign `polarity` in the
  /// rank-2 minor obtained by contracting `flat`.
  std::vector<int> elements;
  int polarity = 1;
};

/// Over all corank-2 flats F of the underlying matroid, contracts the
/// lexicographically least basis of F and looks for k elements whose pair
/// signs, taken in ground order, all equal `polarity` (+1 or -1). Parallel
/// pairs have sign 0, so a witness holds one element per parallel class.
/// Throws Error(kInvalidParameters) unless k >= 2 and polarity is +1 or -1.
std::optional<MonochromaticWitness> monochromatic_line_minor(const Chirotope& chi,
                                                            int k, int polarity);

struct FlatScan {
  ElementSet flat;
  int points = 0;  // parallel classes of the rank-2 minor
  std::vector<int> best_plus;
  std::vector<int> best_minus;
};

struct RamseyReport {
  int ell = 0;
  int target = 0;  // ell + 2
  std::vector<FlatScan> flats;
  int best_plus = 0;
  int best_minus = 0;
  bool found = false;  // some polarity reaches target
  /// R(ell+2, ell+2) when known (ell = 1, 2).
  std::optional<int> ramsey_number;
  /// The stated threshold (n0^r - 1) / (r - 1) and the
  /// projective-geometry count (n0^r - 1) / (n0 - 1). Both are reported.
  std::optional<long long> threshold_printed;
  std::optional<long long> threshold_projective;
};

RamseyReport ramsey_scan(const Chirotope& chi, int ell);

}  // namespace pkit
