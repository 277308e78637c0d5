// One PASS/FAIL line per acceptance criterion. Every check is exact
// (combinatorial); exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "positroidkit/constructions.hpp"
#include "positroidkit/corpus.hpp"
#include "positroidkit/errors.hpp"
#include "positroidkit/isomorphism.hpp"
#include "positroidkit/minors.hpp"
#include "positroidkit/oriented.hpp"
#include "positroidkit/positroid.hpp"
#include "positroidkit/verify.hpp"

using namespace pkit;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

bool verified(const VerificationReport& r, Result& out) {
  if (r.outcome == Outcome::kVerified) return true;
  out.pass = false;
  out.detail += " " + r.claim_id + "=" + to_string(r.outcome);
  if (!r.witnesses.empty()) out.detail += " (" + r.witnesses.front().context + ")";
  return false;
}

Result criterion1(int threads) {
  Result out;
  for (auto [r, l] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3}}) {
    const auto rep = verify_theorem_main(r, l, threads);
    verified(rep, out);
    out.detail += " (r,l)=(" + std::to_string(r) + "," + std::to_string(l) +
                  "): over-bound classes " + std::to_string(rep.count("classes_over_bound")) +
                  ", extremal classes " + std::to_string(rep.count("extremal_classes")) + ";";
  }
  return out;
}

Result criterion2() {
  Result out;
  const auto rep = verify_excluded_catalog();
  verified(rep, out);
  out.detail += " entries " + std::to_string(rep.count("entries")) +
                ", single-element minors " + std::to_string(rep.count("single_element_minors"));
  return out;
}

Result criterion3() {
  Result out;
  const auto rep = verify_prop31(8);
  verified(rep, out);
  out.detail += " hypothesis instances n6/n7/n8 = " + std::to_string(rep.count("hypothesis_n6")) +
                "/" + std::to_string(rep.count("hypothesis_n7")) + "/" +
                std::to_string(rep.count("hypothesis_n8")) + " of " +
                std::to_string(rep.count("simple_rank3_n8")) + " at n=8";
  return out;
}

Result criterion4() {
  Result out;
  const auto rep = verify_lemma43(5, 3);
  verified(rep, out);
  out.detail += " trees " + std::to_string(rep.count("trees")) + " (r<=5, l<=3)";
  return out;
}

Result criterion5() {
  Result out;
  auto fail = [&](const std::string& what) {
    out.pass = false;
    out.detail += " " + what + ";";
  };
  for (int r = 3; r <= 5; ++r) {
    if (!are_isomorphic(whirl_like(r, 3), whirl_like(r, 4))) {
      fail("W(" + std::to_string(r) + ",3) !~ W(" + std::to_string(r) + ",4)");
    }
  }
  int checked = 0;
  for (int r = 2; r <= 4; ++r) {
    for (int l = 3; l <= 5; ++l) {
      const std::string tag = "(" + std::to_string(r) + "," + std::to_string(l) + ")";
      const Matroid w = whirl_like(r, l);
      const Matroid wp = whirl_like_plus(r, l);
      if (r >= 3 && w.size() != r + r * ((l - 1) / 2)) fail("size " + tag);
      if (r == 2 && !are_isomorphic(w, uniform(2, (l - 1) / 2 + 2))) fail("W(2,l) line " + tag);
      if (!is_positroid(w) || !is_positroid(wp)) fail("positroid " + tag);
      if (has_uniform_line_minor(w, l + 2)) fail("W line minor " + tag);
      if (l % 2 == 0 && has_uniform_line_minor(wp, l + 2)) fail("W+ line minor " + tag);
      if (r >= 3 && (!is_3connected(w) || !is_3connected(wp))) fail("3-connected " + tag);
      ++checked;
    }
  }
  out.detail += " " + std::to_string(checked) +
                " (r,l) pairs, r in 2..4, l in 3..5; 3-connectivity at r in {3,4}";
  return out;
}

Result criterion6(int threads) {
  Result out;
  for (int l : {3, 4}) {
    const auto rep = verify_conjecture61_rank3(l, threads);
    verified(rep, out);
    out.detail += " l=" + std::to_string(l) + ": over-bound classes " +
                  std::to_string(rep.count("classes_over_bound")) + ";";
  }
  return out;
}

Result criterion7(int threads) {
  Result out;
  const auto rep = verify_oracle_agreement(7, threads);
  verified(rep, out);
  out.detail += " positroid classes n=1..7:";
  for (int n = 1; n <= 7; ++n) out.detail += " " + std::to_string(rep.count("positroids_n" + std::to_string(n)));
  return out;
}

Result criterion8(int threads) {
  Result out;
  std::vector<Matroid> corpus;
  for (int n = 0; n <= 7; ++n) {
    for (Matroid& m : all_matroids(n)) corpus.push_back(std::move(m));
  }
  const std::size_t upto7 = corpus.size();
  // n = 8: rank <= 3 (with loops and parallel classes), their duals, and
  // every positroid.
  for (Matroid& m : matroids_rank_at_most3(8)) {
    corpus.push_back(dual(m));
    corpus.push_back(std::move(m));
  }
  auto positroids = enumerate_positroids(8, {}, threads);
  for (Matroid& m : positroids.classes) corpus.push_back(std::move(m));
  long long agree = 0;
  for (const Matroid& m : corpus) {
    for (int k = 3; k <= 5; ++k) {
      const bool fast = has_uniform_line_minor(m, k);
      const bool generic = has_minor(m, uniform(2, k)).has_value();
      if (fast != generic) {
        out.pass = false;
        out.detail += " disagreement at k=" + std::to_string(k) + ";";
      } else {
        ++agree;
      }
    }
  }
  out.detail += " " + std::to_string(agree) + " agreeing tests over " +
                std::to_string(corpus.size()) + " matroids (" + std::to_string(upto7) +
                " with n<=7)";
  return out;
}

ExactMatrix to_matrix(const std::vector<std::vector<long long>>& rows) {
  ExactMatrix a;
  for (const auto& row : rows) {
    std::vector<Fraction> r;
    for (long long v : row) r.push_back({v, 1});
    a.push_back(r);
  }
  return a;
}

Result criterion9() {
  Result out;
  std::vector<ExactMatrix> inputs;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::vector<long long>> rows(2, std::vector<long long>(6));
    for (auto& row : rows) {
      for (long long& v : row) v = static_cast<long long>(uniform_below(rng, 19)) - 9;
    }
    inputs.push_back(to_matrix(rows));
  }
  // Structured: evenly spaced slopes, alternating slopes, a hexagon of
  // opposite pairs, and a mixed configuration.
  inputs.push_back(to_matrix({{1, 1, 1, 1, 1, 1}, {0, 1, 2, 3, 4, 5}}));
  inputs.push_back(to_matrix({{1, 1, 1, 1, 1, 1}, {5, -4, 3, -2, 1, 0}}));
  inputs.push_back(to_matrix({{1, 0, -1, -1, 0, 1}, {0, 1, 1, 0, -1, -1}}));
  inputs.push_back(to_matrix({{1, 2, -1, 3, -2, 1}, {1, 1, 2, -1, 3, -3}}));
  int realized = 0, simple = 0, mono = 0, commuted = 0;
  for (const ExactMatrix& a : inputs) {
    Chirotope chi = Chirotope::from_sign_string(2, 2, "+");
    try {
      chi = chirotope_from_matrix(a);
    } catch (const Error&) {
      continue;  // rank-deficient sample
    }
    ++realized;
    const Matroid m = underlying_matroid(chi);
    for (int e = 0; e < chi.size(); ++e) {
      const ElementSet one = ElementSet::single(e);
      bool ok = underlying_matroid(oriented_delete(chi, e)) == deletion(m, one);
      if (!m.loops().contains(e)) {
        ok = ok && underlying_matroid(oriented_contract(chi, e)) == contraction(m, one);
      }
      if (ok) {
        ++commuted;
      } else {
        out.pass = false;
        out.detail += " commutation fails;";
      }
    }
    if (!m.is_simple()) continue;
    ++simple;
    const bool found = monochromatic_line_minor(chi, 3, 1).has_value() ||
                       monochromatic_line_minor(chi, 3, -1).has_value();
    if (found && ramsey_scan(chi, 1).found) {
      ++mono;
    } else {
      out.pass = false;
      out.detail += " simple chirotope without a monochromatic triple;";
    }
  }
  if (simple == 0) {
    out.pass = false;
    out.detail += " no simple instances generated;";
  }
  out.detail += " " + std::to_string(realized) + " chirotopes, " + std::to_string(simple) +
                " simple with " + std::to_string(mono) + " monochromatic triples, " +
                std::to_string(commuted) + " commuting element minors";
  return out;
}

}  // namespace

int main() {
  const int threads = default_threads();
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"theorem exhaustive at (3,2),(4,2),(3,3)", [&] { return criterion1(threads); }},
      {"excluded-minor catalog minimality", [] { return criterion2(); }},
      {"three-point hypothesis exhaustive at n<=8", [] { return criterion3(); }},
      {"parallel-connection family r<=5, l<=3", [] { return criterion4(); }},
      {"whirl-like constructions", [] { return criterion5(); }},
      {"rank-3 conjecture evidence l in {3,4}", [&] { return criterion6(threads); }},
      {"oracle agreement n<=7", [&] { return criterion7(threads); }},
      {"line-minor test equivalence n<=8, k in {3,4,5}", [&] { return criterion8(threads); }},
      {"rank-2 Ramsey property and minor commutation", [] { return criterion9(); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string(" exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s [tolerance exact, %.1f s]%s\n", r.pass ? "PASS" : "FAIL",
                i + 1, criteria[i].first.c_str(), secs, r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
