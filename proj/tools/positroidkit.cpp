// positroidkit command-line front end.
//
// Exit codes: 0 success, 1 a verification produced a counterexample,
// 2 usage, parse or input errors.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "positroidkit/constructions.hpp"
#include "positroidkit/errors.hpp"
#include "positroidkit/matroid_io.hpp"
#include "positroidkit/minors.hpp"
#include "positroidkit/oriented.hpp"
#include "positroidkit/positroid.hpp"
#include "positroidkit/verify.hpp"

namespace {

using namespace pkit;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

void print_witness(const MinorWitness& w, int host_size) {
  std::cout << "contract " << w.contracted.to_string() << "\n";
  std::cout << "delete " << w.deleted.to_string() << "\n";
  std::cout << "mapping";
  const ElementSet kept = ElementSet::full(host_size) - w.contracted - w.deleted;
  int i = 0;
  for (int e : kept) std::cout << " " << e << "->" << w.iso.mapping[i++];
  std::cout << "\n";
}

struct ConstructArgs {
  std::string family;
  std::string catalog_id;
  int r = 0;
  int l = 0;
  int n = 0;
  bool plus = false;
};

int run_construct(const ConstructArgs& a) {
  if (!a.catalog_id.empty()) {
    const auto id = parse_catalog_id(a.catalog_id);
    if (!id) {
      std::cerr << "unknown catalog id '" << a.catalog_id
                << "' (expected M1..M8 or FIG2)\n";
      return kExitUsage;
    }
    std::cout << to_text(catalog(*id));
    return kExitOk;
  }
  if (a.family == "extremal") {
    std::cout << to_text(extremal_family(a.r, a.l));
  } else if (a.family == "whirl") {
    std::cout << to_text(a.plus ? whirl_like_plus(a.r, a.l) : whirl_like(a.r, a.l));
  } else if (a.family == "uniform") {
    std::cout << to_text(uniform(a.r, a.n));
  } else if (a.family == "trees") {
    bool first = true;
    for (const Matroid& m : all_parallel_connection_trees(a.r, a.l)) {
      if (!first) std::cout << "\n";
      first = false;
      std::cout << to_text(m);
    }
  } else {
    std::cerr << "give --catalog or --family extremal|whirl|uniform|trees\n";
    return kExitUsage;
  }
  return kExitOk;
}

struct MinorArgs {
  std::string host;
  std::string target;
  int uniform_line = 0;
  bool catalog = false;
};

int run_minor(const MinorArgs& a) {
  const Matroid host = load_matroid(a.host);
  if (a.catalog) {
    const auto found = find_catalog_minor(host);
    if (!found) {
      std::cout << "none\n";
      return kExitOk;
    }
    std::cout << "catalog " << to_string(found->id) << "\n";
    print_witness(found->witness, host.size());
    return kExitOk;
  }
  std::optional<MinorWitness> w;
  if (a.uniform_line > 0) {
    w = uniform_line_minor_witness(host, a.uniform_line);
  } else if (!a.target.empty()) {
    w = has_minor(host, load_matroid(a.target));
  } else {
    std::cerr << "give --target, --uniform-line or --catalog\n";
    return kExitUsage;
  }
  if (w) {
    print_witness(*w, host.size());
  } else {
    std::cout << "none\n";
  }
  return kExitOk;
}

struct PositroidArgs {
  std::string check;
  int enumerate = 0;
  std::optional<int> rank;
  bool simple = false;
  bool connected = false;
  bool three_connected = false;
  std::optional<int> no_line_minor;
  bool count_only = false;
  int threads = 1;
};

int run_positroid(const PositroidArgs& a) {
  if (!a.check.empty()) {
    const Matroid m = load_matroid(a.check);
    if (!is_positroid(m)) {
      std::cout << "NOT_POSITROID\n";
      return kExitOk;
    }
    std::cout << "POSITROID\n";
    for (ElementSet part : components(m)) {
      const std::vector<int> labels = part.to_vector();
      std::vector<int> order{labels.front()};
      if (part.size() > 1) {
        const auto local = bonin_check(restriction(m, part));
        order.clear();
        for (int e : *local) order.push_back(labels[e]);
      }
      std::cout << "order";
      for (int e : order) std::cout << " " << e;
      std::cout << "\n";
    }
    return kExitOk;
  }
  if (a.enumerate > 0) {
    PositroidFilters f;
    f.rank = a.rank;
    f.simple = a.simple;
    f.connected = a.connected;
    f.three_connected = a.three_connected;
    f.no_line_minor = a.no_line_minor;
    const auto result = enumerate_positroids(a.enumerate, f, a.threads);
    if (a.count_only) {
      std::cout << result.classes.size() << "\n";
      return kExitOk;
    }
    std::cout << "# " << result.classes.size() << " classes from "
              << result.decorated_permutations << " decorated permutations\n";
    for (const Matroid& m : result.classes) std::cout << "\n" << to_text(m);
    return kExitOk;
  }
  std::cerr << "give --check FILE or --enumerate N\n";
  return kExitUsage;
}

struct OrientedArgs {
  std::string matrix;
  int mono = 0;
  std::string polarity = "plus";
  int ramsey = 0;
  bool signs = false;
};

int run_oriented(const OrientedArgs& a) {
  const Chirotope chi = chirotope_from_matrix(load_matrix_csv(a.matrix));
  if (a.signs) std::cout << "signs " << chi.to_sign_string() << "\n";
  if (a.mono > 0) {
    const int polarity = a.polarity == "minus" ? -1 : 1;
    const auto w = monochromatic_line_minor(chi, a.mono, polarity);
    if (!w) {
      std::cout << "none\n";
      return kExitOk;
    }
    std::cout << "flat " << w->flat.to_string() << "\n";
    std::cout << "elements";
    for (int e : w->elements) std::cout << " " << e;
    std::cout << "\n";
    return kExitOk;
  }
  if (a.ramsey > 0) {
    const RamseyReport rep = ramsey_scan(chi, a.ramsey);
    for (const FlatScan& s : rep.flats) {
      std::cout << "flat " << s.flat.to_string() << " points " << s.points << " plus "
                << s.best_plus.size() << " minus " << s.best_minus.size() << "\n";
    }
    std::cout << "target " << rep.target << " best_plus " << rep.best_plus
              << " best_minus " << rep.best_minus << " found "
              << (rep.found ? "yes" : "no") << "\n";
    if (rep.ramsey_number) {
      std::cout << "ramsey_number " << *rep.ramsey_number << "\n";
    }
    if (rep.threshold_printed && rep.threshold_projective) {
      std::cout << "threshold (n0^r-1)/(r-1) = " << *rep.threshold_printed << "\n";
      std::cout << "threshold (n0^r-1)/(n0-1) = " << *rep.threshold_projective << "\n";
      if (*rep.threshold_printed != *rep.threshold_projective) {
        std::cout << "note: the two threshold readings disagree\n";
      }
    }
    return kExitOk;
  }
  if (!a.signs) {
    std::cerr << "give --mono K, --ramsey L or --signs\n";
    return kExitUsage;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string which;
  std::optional<int> r;
  std::optional<int> l;
  std::optional<int> max_n;
  std::optional<int> samples;
  std::uint64_t seed = 1;
  int threads = 1;
  bool allow_n9 = false;
  std::string out;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  VerifyConfig config;
  config.threads = a.threads;
  config.seed = a.seed;
  config.allow_n9 = a.allow_n9;
  if (a.max_n) {
    config.prop31_max_n = *a.max_n;
    config.oracle_max_n = *a.max_n;
  }
  if (a.samples) config.prop32_samples = *a.samples;
  if (a.r) config.lemma_r_max = *a.r;
  if (a.l) config.lemma_l_max = *a.l;

  std::vector<VerificationReport> reports;
  if (a.which == "all") {
    reports = run_all(config);
  } else if (a.which == "theorem-main") {
    if (a.r && a.l) {
      reports.push_back(verify_theorem_main(*a.r, *a.l, a.threads));
    } else {
      for (const auto& [r, l] : config.theorem_cases) {
        reports.push_back(verify_theorem_main(r, l, a.threads));
      }
    }
  } else if (a.which == "excluded-catalog") {
    reports.push_back(verify_excluded_catalog());
  } else if (a.which == "prop31") {
    reports.push_back(verify_prop31(config.prop31_max_n, config.allow_n9));
  } else if (a.which == "prop32") {
    reports.push_back(verify_prop32(config.prop32_samples, config.seed));
  } else if (a.which == "lemma43") {
    reports.push_back(verify_lemma43(config.lemma_r_max, config.lemma_l_max));
  } else if (a.which == "conj61") {
    if (a.l) {
      reports.push_back(verify_conjecture61_rank3(*a.l, a.threads));
    } else {
      for (int l : config.conjecture_ells) {
        reports.push_back(verify_conjecture61_rank3(l, a.threads));
      }
    }
  } else if (a.which == "oracle") {
    reports.push_back(verify_oracle_agreement(config.oracle_max_n, a.threads));
  } else {
    std::cerr << "unknown verification '" << a.which << "'\n";
    return kExitUsage;
  }

  if (a.json) {
    std::cout << reports_to_json(reports);
  } else {
    for (const auto& r : reports) {
      std::cout << r.claim_id;
      for (const auto& [k, v] : r.params) std::cout << " " << k << "=" << v;
      std::cout << ": " << to_string(r.outcome);
      if (!r.scope_note.empty()) std::cout << " (" << r.scope_note << ")";
      std::cout << "\n";
    }
  }
  if (!a.out.empty()) {
    for (const auto& file : write_run(a.out, config, reports)) {
      std::cerr << "wrote " << file << "\n";
    }
  }
  return has_counterexample(reports) ? kExitCounterexample : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid and positroid toolkit: constructions, minors, positroid tests, "
               "chirotopes and exhaustive verification runs."};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* cmd_construct = app.add_subcommand("construct", "Emit a named matroid");
  cmd_construct->add_option("--family", construct.family,
                            "extremal | whirl | uniform | trees");
  cmd_construct->add_option("--catalog", construct.catalog_id, "M1..M8 or FIG2");
  cmd_construct->add_option("--r", construct.r, "Rank");
  cmd_construct->add_option("--l", construct.l, "Line parameter");
  cmd_construct->add_option("--n", construct.n, "Size (uniform only)");
  cmd_construct->add_flag("--plus", construct.plus, "Whirl-like plus variant");

  MinorArgs minor;
  auto* cmd_minor = app.add_subcommand("minor", "Search for a minor");
  cmd_minor->add_option("--host", minor.host, "Host matroid file")->required();
  cmd_minor->add_option("--target", minor.target, "Target matroid file");
  cmd_minor->add_option("--uniform-line", minor.uniform_line, "Look for U(2,k)");
  cmd_minor->add_flag("--catalog", minor.catalog, "Look for any catalog matroid");

  PositroidArgs positroid;
  positroid.threads = default_threads();
  auto* cmd_positroid = app.add_subcommand("positroid", "Test or enumerate positroids");
  cmd_positroid->add_option("--check", positroid.check, "Matroid file to test");
  cmd_positroid->add_option("--enumerate", positroid.enumerate, "Ground set size");
  cmd_positroid->add_option("--rank", positroid.rank);
  cmd_positroid->add_flag("--simple", positroid.simple);
  cmd_positroid->add_flag("--connected", positroid.connected);
  cmd_positroid->add_flag("--3connected", positroid.three_connected);
  cmd_positroid->add_option("--no-line-minor", positroid.no_line_minor,
                            "Drop positroids with a U(2,k) minor");
  cmd_positroid->add_flag("--count-only", positroid.count_only);
  cmd_positroid->add_option("--threads", positroid.threads);

  OrientedArgs oriented;
  auto* cmd_oriented = app.add_subcommand("oriented", "Chirotope queries on a matrix");
  cmd_oriented->add_option("--matrix", oriented.matrix, "CSV of integers or p/q")
      ->required();
  cmd_oriented->add_option("--mono", oriented.mono, "Monochromatic line size k");
  cmd_oriented->add_option("--polarity", oriented.polarity)
      ->check(CLI::IsMember({"plus", "minus"}));
  cmd_oriented->add_option("--ramsey", oriented.ramsey, "Scan with line parameter l");
  cmd_oriented->add_flag("--signs", oriented.signs, "Print the sign vector");

  VerifyArgs verify;
  verify.threads = default_threads();
  auto* cmd_verify = app.add_subcommand("verify", "Run exhaustive checks");
  cmd_verify->add_option("which", verify.which)
      ->required()
      ->check(CLI::IsMember({"all", "theorem-main", "excluded-catalog", "prop31", "prop32",
                             "lemma43", "conj61", "oracle"}));
  cmd_verify->add_option("--r", verify.r);
  cmd_verify->add_option("--l", verify.l);
  cmd_verify->add_option("--max-n", verify.max_n);
  cmd_verify->add_option("--samples", verify.samples);
  cmd_verify->add_option("--seed", verify.seed);
  cmd_verify->add_option("--threads", verify.threads);
  cmd_verify->add_flag("--allow-n9", verify.allow_n9, "Lift the n <= 8 cap for prop31");
  cmd_verify->add_option("--out", verify.out, "Report path; also writes manifest");
  cmd_verify->add_flag("--json", verify.json, "Print the JSON report to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_construct) return run_construct(construct);
    if (*cmd_minor) return run_minor(minor);
    if (*cmd_positroid) return run_positroid(positroid);
    if (*cmd_oriented) return run_oriented(oriented);
    if (*cmd_verify) return run_verify(verify);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
