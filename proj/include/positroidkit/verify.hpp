#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "positroidkit/matroid.hpp"

namespace pkit {

inline constexpr int kReportSchemaVersion = 1;

enum class Outcome { kVerified, kCounterexample, kPartial };
std::string to_string(Outcome o);

struct ReportWitness {
  std::string role;     // "counterexample", "attains-bound", ...
  std::string context;  // free text: which check failed, witness sets
  std::string matroid;  // text format
};

struct VerificationReport {
  std::string claim_id;
  std::vector<std::pair<std::string, long long>> params;
  Outcome outcome = Outcome::kVerified;
  std::vector<std::pair<std::string, long long>> counts;
  std::vector<ReportWitness> witnesses;
  std::string scope_note;  // set for partial outcomes
  double elapsed_ms = 0;

  long long count(const std::string& key) const;
  void add_count(const std::string& key, long long value);
  void fail(std::string context, const Matroid& m);
};

/// Claim ids.
inline constexpr const char* kClaimTheoremMain = "THM_MAIN";
inline constexpr const char* kClaimExcluded = "EXCLUDED_MINIMALITY";
inline constexpr const char* kClaimProp31 = "PROP_3_1";
inline constexpr const char* kClaimProp32 = "PROP_3_2";
inline constexpr const char* kClaimLemma43 = "LEMMA_4_3";
inline constexpr const char* kClaimConj61 = "CONJ_6_1_R3";
inline constexpr const char* kClaimOracle = "ORACLE_AGREEMENT";

/// No simple rank-r positroid on l(r-1)+2 elements avoids U_{2,l+2}, and
/// every one on l(r-1)+1 elements is a parallel-connection tree of copies of
/// U_{2,l+1}. Partial when l(r-1)+2 exceeds the enumeration cap.
VerificationReport verify_theorem_main(int r, int l, int threads = 1);

/// Each catalog matroid fails the positroid test while every simplified
/// single-element deletion and contraction passes.
VerificationReport verify_excluded_catalog();

/// Every simple rank-3 matroid on at most max_n points that meets the
/// three-points-on-a-long-line hypothesis has a catalog minor and is not a
/// positroid. max_n <= 8 unless allow_n9.
VerificationReport verify_prop31(int max_n, bool allow_n9 = false);

/// Seeded random rank-4 instances of at most 12 elements built to meet the
/// line/three-planes hypothesis; each must have a catalog minor and fail the
/// positroid test. The FIG2 instance is always checked first, so the
/// "instances" count is samples + 1.
VerificationReport verify_prop32(int samples, std::uint64_t seed);

/// Parallel-connection trees for 2 <= r <= r_max, 1 <= l <= l_max: size
/// l(r-1)+1, simple, rank r, positroid, no U_{2,l+2} minor.
VerificationReport verify_lemma43(int r_max, int l_max);

/// Rank 3: no 3-connected simple positroid on bound+1 elements avoids
/// U_{2,l+2}, and the whirl-like construction reaches the bound. Partial when
/// bound+1 exceeds the enumeration cap.
VerificationReport verify_conjecture61_rank3(int l, int threads = 1);

/// Isomorphism classes from decorated permutations equal the classes of the
/// full corpus that pass the positroid test, for 1 <= n <= max_n (<= 7).
VerificationReport verify_oracle_agreement(int max_n, int threads = 1);

/// Random rank-4 instance for verify_prop32; exposed for reproducibility.
Matroid prop32_sample(std::mt19937_64& rng);

/// Uniform integer in [0, bound) by rejection, independent of the standard
/// library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct VerifyConfig {
  int threads = 1;
  std::uint64_t seed = 1;
  int prop31_max_n = 8;
  bool allow_n9 = false;
  int prop32_samples = 2000;
  int lemma_r_max = 5;
  int lemma_l_max = 3;
  int oracle_max_n = 7;
  std::vector<std::pair<int, int>> theorem_cases = {{2, 3}, {3, 1}, {3, 2},
                                                    {4, 2}, {3, 3}, {4, 3}};
  std::vector<int> conjecture_ells = {3, 4, 5};
};

/// Runs every check within the configured caps, in a fixed order.
std::vector<VerificationReport> run_all(const VerifyConfig& config);

/// JSON document {schema_version, reports: [...]}; deterministic apart from
/// each report's elapsed_ms.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// Writes the JSON report to `path`, a run manifest to `path` + ".manifest.json"
/// (versions, config, seed, timings, timestamp), and each counterexample to
/// `path` + ".reproducers/<claim>_<k>.matroid". Returns the files written.
std::vector<std::string> write_run(const std::string& path, const VerifyConfig& config,
                                   const std::vector<VerificationReport>& reports);

bool has_counterexample(const std::vector<VerificationReport>& reports);

/// Default worker count: POSITROIDKIT_THREADS if set and positive, else 1.
int default_threads();

}  // namespace pkit
