#include "positroidkit/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "positroidkit/constructions.hpp"
#include "positroidkit/corpus.hpp"
#include "positroidkit/errors.hpp"
#include "positroidkit/isomorphism.hpp"
#include "positroidkit/matroid_io.hpp"
#include "positroidkit/minors.hpp"
#include "positroidkit/positroid.hpp"

#ifndef POSITROIDKIT_VERSION
#define POSITROIDKIT_VERSION "0.0.0"
#endif

namespace pkit {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class Timer {
 public:
  explicit Timer(VerificationReport& report) : report_(report), start_(Clock::now()) {}
  ~Timer() {
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  VerificationReport& report_;
  Clock::time_point start_;
};

VerificationReport make_report(const char* claim,
                               std::vector<std::pair<std::string, long long>> params) {
  VerificationReport report;
  report.claim_id = claim;
  report.params = std::move(params);
  return report;
}

void mark_partial(VerificationReport& report, std::string note) {
  if (report.outcome == Outcome::kVerified) report.outcome = Outcome::kPartial;
  if (!report.scope_note.empty()) report.scope_note += "; ";
  report.scope_note += note;
}

std::set<std::string> forms_of(const std::vector<Matroid>& ms) {
  std::set<std::string> out;
  for (const Matroid& m : ms) out.insert(canonical_form(m));
  return out;
}

int conjecture_bound(int l) { return 3 + 3 * ((l - 1) / 2) + (l % 2 == 0 ? 1 : 0); }

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["claim_id"] = r.claim_id;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["outcome"] = to_string(r.outcome);
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  j["counts"] = counts;
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"role", w.role}, {"context", w.context}, {"matroid", w.matroid}});
  }
  j["witnesses"] = witnesses;
  if (!r.scope_note.empty()) j["scope_note"] = r.scope_note;
  j["elapsed_ms"] = static_cast<long long>(r.elapsed_ms + 0.5);
  return j;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kVerified: return "verified";
    case Outcome::kCounterexample: return "counterexample";
    case Outcome::kPartial: return "partial";
  }
  return "unknown";
}

long long VerificationReport::count(const std::string& key) const {
  for (const auto& [k, v] : counts) {
    if (k == key) return v;
  }
  return 0;
}

void VerificationReport::add_count(const std::string& key, long long value) {
  for (auto& [k, v] : counts) {
    if (k == key) {
      v += value;
      return;
    }
  }
  counts.emplace_back(key, value);
}

void VerificationReport::fail(std::string context, const Matroid& m) {
  outcome = Outcome::kCounterexample;
  witnesses.push_back({"counterexample", std::move(context), to_text(m)});
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

VerificationReport verify_theorem_main(int r, int l, int threads) {
  if (r < 2 || l < 1) throw Error(ErrorKind::kInvalidParameters, "need r >= 2, l >= 1");
  const int extremal_n = l * (r - 1) + 1;
  VerificationReport report = make_report(
      kClaimTheoremMain, {{"r", r}, {"l", l}, {"extremal_n", extremal_n}});
  Timer timer(report);
  PositroidFilters filters;
  filters.rank = r;
  filters.simple = true;
  filters.no_line_minor = l + 2;

  if (extremal_n + 1 > kMaxEnumerationSize) {
    mark_partial(report, "n = " + std::to_string(extremal_n + 1) +
                             " exceeds the enumeration cap of " +
                             std::to_string(kMaxEnumerationSize));
  } else {
    const auto over = enumerate_positroids(extremal_n + 1, filters, threads);
    report.add_count("decorated_permutations_over_bound",
                     static_cast<long long>(over.decorated_permutations));
    report.add_count("classes_over_bound", static_cast<long long>(over.classes.size()));
    for (const Matroid& m : over.classes) {
      report.fail("simple rank-" + std::to_string(r) + " positroid on " +
                      std::to_string(m.size()) + " elements without a U(2," +
                      std::to_string(l + 2) + ") minor",
                  m);
    }
  }

  const auto trees = all_parallel_connection_trees(r, l);
  report.add_count("tree_classes", static_cast<long long>(trees.size()));
  if (extremal_n > kMaxEnumerationSize) {
    mark_partial(report, "extremal size " + std::to_string(extremal_n) +
                             " exceeds the enumeration cap");
    return report;
  }
  const auto extremal = enumerate_positroids(extremal_n, filters, threads);
  report.add_count("decorated_permutations_extremal",
                   static_cast<long long>(extremal.decorated_permutations));
  report.add_count("extremal_classes", static_cast<long long>(extremal.classes.size()));
  const std::set<std::string> tree_forms = forms_of(trees);
  const std::set<std::string> found = forms_of(extremal.classes);
  for (const Matroid& m : extremal.classes) {
    if (!tree_forms.contains(canonical_form(m))) {
      report.fail("extremal positroid not isomorphic to a parallel-connection tree", m);
    }
  }
  for (const Matroid& t : trees) {
    if (!found.contains(canonical_form(t))) {
      report.fail("parallel-connection tree missing from the extremal enumeration", t);
    }
  }
  return report;
}

VerificationReport verify_excluded_catalog() {
  VerificationReport report = make_report(kClaimExcluded, {});
  Timer timer(report);
  for (CatalogId id : kAllCatalogIds) {
    const Matroid m = catalog(id);
    report.add_count("entries", 1);
    if (is_positroid(m)) report.fail(to_string(id) + " passes the positroid test", m);
    for (int e = 0; e < m.size(); ++e) {
      const ElementSet single = ElementSet::single(e);
      const Matroid del = simplify(deletion(m, single)).simple;
      const Matroid con = simplify(contraction(m, single)).simple;
      report.add_count("single_element_minors", 2);
      if (!is_positroid(del)) {
        report.fail(to_string(id) + " deletion of " + std::to_string(e) +
                        " is not a positroid",
                    m);
      }
      if (!is_positroid(con)) {
        report.fail(to_string(id) + " contraction of " + std::to_string(e) +
                        " is not a positroid",
                    m);
      }
    }
  }
  return report;
}

VerificationReport verify_prop31(int max_n, bool allow_n9) {
  VerificationReport report =
      make_report(kClaimProp31, {{"max_n", max_n}, {"allow_n9", allow_n9 ? 1 : 0}});
  Timer timer(report);
  const int cap = allow_n9 ? kMaxSimpleRank3 : 8;
  int n_max = max_n;
  if (max_n > cap) {
    mark_partial(report, "max_n " + std::to_string(max_n) + " capped at " +
                             std::to_string(cap));
    n_max = cap;
  }
  if (n_max < 3) return report;
  const auto by_size = simple_rank3_by_size(n_max);
  for (int n = 3; n <= n_max; ++n) {
    const std::string suffix = "_n" + std::to_string(n);
    report.add_count("simple_rank3" + suffix, static_cast<long long>(by_size[n].size()));
    for (const Matroid& m : by_size[n]) {
      if (!prop31_hypothesis(m)) continue;
      report.add_count("hypothesis" + suffix, 1);
      const auto minor = find_catalog_minor(m);
      if (!minor || minor->id == CatalogId::kFig2 ||
          !is_valid_minor_witness(m, catalog(minor->id), minor->witness)) {
        report.fail("no rank-3 catalog minor", m);
        continue;
      }
      report.add_count("minor_" + to_string(minor->id), 1);
      if (is_positroid(m)) report.fail("hypothesis holds but positroid test passes", m);
    }
  }
  return report;
}

Matroid prop32_sample(std::mt19937_64& rng) {
  // Core: line L = {e1,e2,e3}; for each i a second line {e_i, a_i, b_i}
  // spanning a plane with L. Extra points go on random flats of rank >= 2
  // once the rank is 4.
  const int extras = static_cast<int>(uniform_below(rng, 4));
  std::vector<int> extra_after(4, 0);
  for (int k = 0; k < extras; ++k) ++extra_after[uniform_below(rng, 4)];

  auto add_extras = [&](Matroid& m, int count) {
    for (int k = 0; k < count; ++k) {
      const FlatLattice lattice = flat_lattice(m);
      std::vector<ElementSet> flats;
      for (int rk = 2; rk <= m.rank(); ++rk) {
        flats.insert(flats.end(), lattice.by_rank[rk].begin(), lattice.by_rank[rk].end());
      }
      m = principal_extension(m, flats[uniform_below(rng, flats.size())]);
    }
  };
  auto closure_of = [](const Matroid& m, ElementSet s) { return m.closure(s); };

  Matroid m = uniform(2, 2);
  const int e1 = 0, e2 = 1, e3 = 2;
  m = principal_extension(m, m.ground());
  const int a1 = m.size();
  m = direct_sum(m, uniform(1, 1));
  m = principal_extension(m, closure_of(m, ElementSet{e1, a1}));
  const int a2 = m.size();
  m = direct_sum(m, uniform(1, 1));
  add_extras(m, extra_after[0]);
  m = principal_extension(m, closure_of(m, ElementSet{e2, a2}));
  add_extras(m, extra_after[1]);
  const int a3 = m.size();
  m = principal_extension(m, m.ground());
  add_extras(m, extra_after[2]);
  m = principal_extension(m, closure_of(m, ElementSet{e3, a3}));
  add_extras(m, extra_after[3]);

  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = m.size() - 1; i > 0; --i) {
    std::swap(perm[i], perm[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  }
  return relabel(m, perm);
}

VerificationReport verify_prop32(int samples, std::uint64_t seed) {
  VerificationReport report = make_report(
      kClaimProp32, {{"samples", samples}, {"seed", static_cast<long long>(seed)}});
  Timer timer(report);
  std::mt19937_64 rng(seed);
  std::vector<Matroid> instances{catalog(CatalogId::kFig2)};
  for (int s = 0; s < samples; ++s) instances.push_back(prop32_sample(rng));
  for (const Matroid& m : instances) {
    report.add_count("instances", 1);
    report.add_count("size_" + std::to_string(m.size()), 1);
    if (!m.is_simple() || m.rank() != 4 || !prop32_hypothesis(m)) {
      report.add_count("hypothesis_not_met", 1);
      continue;
    }
    report.add_count("hypothesis", 1);
    const auto minor = find_catalog_minor(m);
    if (!minor || !is_valid_minor_witness(m, catalog(minor->id), minor->witness)) {
      report.fail("no catalog minor", m);
      continue;
    }
    report.add_count("minor_" + to_string(minor->id), 1);
    if (is_positroid(m)) report.fail("hypothesis holds but positroid test passes", m);
  }
  return report;
}

VerificationReport verify_lemma43(int r_max, int l_max) {
  VerificationReport report =
      make_report(kClaimLemma43, {{"r_max", r_max}, {"l_max", l_max}});
  Timer timer(report);
  for (int r = 2; r <= r_max; ++r) {
    for (int l = 1; l <= l_max; ++l) {
      const int n = l * (r - 1) + 1;
      if (n > kMaxGround) {
        mark_partial(report, "r=" + std::to_string(r) + ", l=" + std::to_string(l) +
                                 " exceeds the ground-set limit");
        continue;
      }
      for (const Matroid& m : all_parallel_connection_trees(r, l)) {
        report.add_count("trees", 1);
        const std::string tag = "(r=" + std::to_string(r) + ", l=" + std::to_string(l) + ") ";
        if (m.size() != n) report.fail(tag + "wrong size", m);
        if (m.rank() != r) report.fail(tag + "wrong rank", m);
        if (!m.is_simple()) report.fail(tag + "not simple", m);
        if (!is_positroid(m)) report.fail(tag + "not a positroid", m);
        if (has_uniform_line_minor(m, l + 2)) {
          report.fail(tag + "has a U(2," + std::to_string(l + 2) + ") minor", m);
        }
      }
    }
  }
  return report;
}

VerificationReport verify_conjecture61_rank3(int l, int threads) {
  if (l < 3) throw Error(ErrorKind::kInvalidParameters, "need l >= 3");
  const int bound = conjecture_bound(l);
  VerificationReport report =
      make_report(kClaimConj61, {{"r", 3}, {"l", l}, {"bound", bound}});
  Timer timer(report);

  const Matroid w = l % 2 == 0 ? whirl_like_plus(3, l) : whirl_like(3, l);
  const bool attains = w.size() == bound && w.rank() == 3 && w.is_simple() &&
                       is_3connected(w) && is_positroid(w) &&
                       !has_uniform_line_minor(w, l + 2);
  if (attains) {
    report.witnesses.push_back({"attains-bound",
                                l % 2 == 0 ? "whirl-like plus construction"
                                           : "whirl-like construction",
                                to_text(w)});
  } else {
    report.fail("whirl-like construction does not attain the bound", w);
  }

  if (bound + 1 > kMaxEnumerationSize) {
    mark_partial(report, "n = " + std::to_string(bound + 1) +
                             " exceeds the enumeration cap of " +
                             std::to_string(kMaxEnumerationSize));
    return report;
  }
  PositroidFilters filters;
  filters.rank = 3;
  filters.simple = true;
  filters.three_connected = true;
  filters.no_line_minor = l + 2;
  const auto over = enumerate_positroids(bound + 1, filters, threads);
  report.add_count("decorated_permutations",
                   static_cast<long long>(over.decorated_permutations));
  report.add_count("classes_over_bound", static_cast<long long>(over.classes.size()));
  for (const Matroid& m : over.classes) {
    report.fail("3-connected simple rank-3 positroid above the bound", m);
  }
  return report;
}

VerificationReport verify_oracle_agreement(int max_n, int threads) {
  VerificationReport report = make_report(kClaimOracle, {{"max_n", max_n}});
  Timer timer(report);
  int n_max = max_n;
  if (max_n > kMaxFullCorpus) {
    mark_partial(report, "full corpus capped at n = " + std::to_string(kMaxFullCorpus));
    n_max = kMaxFullCorpus;
  }
  for (int n = 1; n <= n_max; ++n) {
    const std::string suffix = "_n" + std::to_string(n);
    const auto corpus = all_matroids(n);
    std::set<std::string> by_check;
    for (const Matroid& m : corpus) {
      if (is_positroid(m)) by_check.insert(canonical_form(m));
    }
    const auto enumerated = enumerate_positroids(n, {}, threads).classes;
    const std::set<std::string> by_enum = forms_of(enumerated);
    report.add_count("corpus" + suffix, static_cast<long long>(corpus.size()));
    report.add_count("positroids" + suffix, static_cast<long long>(by_enum.size()));
    for (const Matroid& m : enumerated) {
      if (!by_check.contains(canonical_form(m))) {
        report.fail("enumerated but rejected by the interval test", m);
      }
    }
    for (const Matroid& m : corpus) {
      const std::string form = canonical_form(m);
      if (by_check.contains(form) && !by_enum.contains(form)) {
        report.fail("accepted by the interval test but never enumerated", m);
      }
    }
  }
  return report;
}

std::vector<VerificationReport> run_all(const VerifyConfig& config) {
  std::vector<VerificationReport> out;
  out.push_back(verify_excluded_catalog());
  out.push_back(verify_lemma43(config.lemma_r_max, config.lemma_l_max));
  for (const auto& [r, l] : config.theorem_cases) {
    out.push_back(verify_theorem_main(r, l, config.threads));
  }
  out.push_back(verify_prop31(config.prop31_max_n, config.allow_n9));
  out.push_back(verify_prop32(config.prop32_samples, config.seed));
  for (int l : config.conjecture_ells) {
    out.push_back(verify_conjecture61_rank3(l, config.threads));
  }
  out.push_back(verify_oracle_agreement(config.oracle_max_n, config.threads));
  return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(report_json(r));
  doc["reports"] = list;
  return doc.dump(2) + "\n";
}

std::vector<std::string> write_run(const std::string& path, const VerifyConfig& config,
                                   const std::vector<VerificationReport>& reports) {
  namespace fs = std::filesystem;
  std::vector<std::string> written;
  auto write_file = [&](const std::string& file, const std::string& body) {
    std::ofstream out(file);
    if (!out) throw Error(ErrorKind::kInvalidInput, "cannot write " + file);
    out << body;
    written.push_back(file);
  };
  write_file(path, reports_to_json(reports));

  Json manifest;
  manifest["schema_version"] = kReportSchemaVersion;
  manifest["tool"] = "positroidkit";
  manifest["version"] = POSITROIDKIT_VERSION;
  manifest["compiler"] = __VERSION__;
  manifest["written_at"] = utc_timestamp();
  manifest["report"] = fs::path(path).filename().string();
  manifest["config"] = {
      {"threads", config.threads},
      {"seed", config.seed},
      {"generator", "std::mt19937_64 with rejection-sampled bounded integers"},
      {"prop31_max_n", config.prop31_max_n},
      {"allow_n9", config.allow_n9},
      {"prop32_samples", config.prop32_samples},
      {"lemma_r_max", config.lemma_r_max},
      {"lemma_l_max", config.lemma_l_max},
      {"oracle_max_n", config.oracle_max_n},
      {"enumeration_cap", kMaxEnumerationSize},
  };
  Json timings = Json::array();
  for (const auto& r : reports) {
    timings.push_back({{"claim_id", r.claim_id},
                       {"outcome", to_string(r.outcome)},
                       {"elapsed_ms", static_cast<long long>(r.elapsed_ms + 0.5)}});
  }
  manifest["timings"] = timings;
  write_file(path + ".manifest.json", manifest.dump(2) + "\n");

  if (has_counterexample(reports)) {
    const fs::path dir = path + ".reproducers";
    fs::create_directories(dir);
    for (const auto& r : reports) {
      int k = 0;
      for (const auto& w : r.witnesses) {
        if (w.role != "counterexample") continue;
        const fs::path file = dir / (r.claim_id + "_" + std::to_string(k++) + ".matroid");
        write_file(file.string(), "# " + r.claim_id + ": " + w.context + "\n" + w.matroid);
      }
    }
  }
  return written;
}

bool has_counterexample(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.outcome == Outcome::kCounterexample) return true;
  }
  return false;
}

int default_threads() {
  if (const char* env = std::getenv("POSITROIDKIT_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 1;
}

}  // namespace pkit
