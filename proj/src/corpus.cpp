#include "positroidkit/corpus.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "positroidkit/constructions.hpp"
#include "positroidkit/errors.hpp"
#include "positroidkit/isomorphism.hpp"

namespace pkit {
namespace {

using FormMap = std::map<std::string, Matroid>;

std::vector<Matroid> values(FormMap& forms) {
  std::vector<Matroid> out;
  out.reserve(forms.size());
  for (auto& [form, m] : forms) out.push_back(std::move(m));
  return out;
}

// Partitions of `todo` into blocks through the new point.
class ExtensionSearch {
 public:
  ExtensionSearch(int old_n, std::vector<ElementSet> lines, FormMap& out)
      : old_n_(old_n), lines_(std::move(lines)), out_(out) {
    collinear_.assign(old_n_, ElementSet{});
    for (ElementSet l : lines_) {
      for (int e : l) collinear_[e] |= l;
    }
  }

  void run() {
    std::vector<ElementSet> blocks;
    extend(ElementSet::full(old_n_), blocks);
  }

 private:
  void extend(ElementSet todo, std::vector<ElementSet>& blocks) {
    if (todo.empty()) {
      emit(blocks);
      return;
    }
    const int q = todo.first();
    const ElementSet rest = todo.without(q);
    blocks.push_back(ElementSet::single(q));
    extend(rest, blocks);
    blocks.pop_back();
    for (int x : rest - collinear_[q]) {
      blocks.push_back(ElementSet{q, x});
      extend(rest.without(x), blocks);
      blocks.pop_back();
    }
    for (ElementSet l : lines_) {
      if (l.contains(q) && l.subset_of(todo)) {
        blocks.push_back(l);
        extend(todo - l, blocks);
        blocks.pop_back();
      }
    }
  }

  void emit(const std::vector<ElementSet>& blocks) {
    const int p = old_n_;
    std::vector<ElementSet> lines;
    for (ElementSet l : lines_) {
      const bool absorbed =
          std::find(blocks.begin(), blocks.end(), l) != blocks.end();
      lines.push_back(absorbed ? l.with(p) : l);
    }
    // Long lines have at least three points, so pairs are new lines.
    for (ElementSet b : blocks) {
      if (b.size() == 2) lines.push_back(b.with(p));
    }
    Matroid m = rank3_from_lines(old_n_ + 1, lines);
    std::string form = canonical_form(m);
    out_.emplace(std::move(form), std::move(m));
  }

  int old_n_;
  std::vector<ElementSet> lines_;
  std::vector<ElementSet> collinear_;  // union of long lines through e
  FormMap& out_;
};

void require_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw Error(ErrorKind::kCapExceeded, std::string(what) + " supports " +
                                             std::to_string(lo) + " <= n <= " +
                                             std::to_string(hi) + ", got n = " +
                                             std::to_string(n));
  }
}

// Every way to write `extra` as an ordered sum of `parts` nonnegative terms.
void compositions(int extra, int parts, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (extra == 0) out.push_back(current);
    return;
  }
  for (int take = 0; take <= extra; ++take) {
    current.push_back(take);
    compositions(extra - take, parts - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Matroid>> simple_rank3_by_size(int max_n) {
  require_range(max_n, 3, kMaxSimpleRank3, "simple rank-3 enumeration");
  std::vector<std::vector<Matroid>> by_size(max_n + 1);
  by_size[3].push_back(uniform(3, 3));
  for (int n = 4; n <= max_n; ++n) {
    FormMap forms;
    for (const Matroid& m : by_size[n - 1]) {
      ExtensionSearch(n - 1, long_lines(m), forms).run();
    }
    by_size[n] = values(forms);
  }
  return by_size;
}

std::vector<Matroid> simple_rank3_matroids(int n) {
  require_range(n, 3, kMaxSimpleRank3, "simple rank-3 enumeration");
  return std::move(simple_rank3_by_size(n)[n]);
}

Matroid inflate(const Matroid& simple, const std::vector<int>& class_sizes, int loops) {
  const int points = simple.size();
  if (static_cast<int>(class_sizes.size()) != points || loops < 0) {
    throw Error(ErrorKind::kInvalidParameters, "class sizes do not match the points");
  }
  std::vector<int> owner;
  for (int p = 0; p < points; ++p) {
    if (class_sizes[p] < 1) throw Error(ErrorKind::kInvalidParameters, "empty class");
    owner.insert(owner.end(), class_sizes[p], p);
  }
  const int n = static_cast<int>(owner.size()) + loops;
  if (n > kMaxGround) throw Error(ErrorKind::kInvalidParameters, "ground set too large");
  std::vector<ElementSet> bases;
  for (ElementSet b : k_subsets(n, simple.rank())) {
    ElementSet image;
    bool ok = true;
    for (int e : b) {
      if (e >= static_cast<int>(owner.size()) || image.contains(owner[e])) {
        ok = false;
        break;
      }
      image = image.with(owner[e]);
    }
    if (ok && simple.is_basis(image)) bases.push_back(b);
  }
  return Matroid::from_bases_trusted(n, std::move(bases));
}

std::vector<Matroid> matroids_rank_at_most3(int n) {
  require_range(n, 0, kMaxSimpleRank3, "rank <= 3 corpus");
  std::vector<std::vector<Matroid>> simple_by_rank(4);
  if (n >= 1) simple_by_rank[1].push_back(uniform(1, 1));
  for (int p = 2; p <= n; ++p) simple_by_rank[2].push_back(uniform(2, p));
  if (n >= 3) {
    const auto rank3 = simple_rank3_by_size(n);
    for (int p = 3; p <= n; ++p) {
      for (const Matroid& m : rank3[p]) simple_by_rank[3].push_back(m);
    }
  }
  FormMap forms;
  {
    Matroid all_loops = Matroid::from_bases_trusted(n, {ElementSet{}});
    forms.emplace(canonical_form(all_loops), all_loops);
  }
  for (int r = 1; r <= 3; ++r) {
    for (const Matroid& s : simple_by_rank[r]) {
      const int points = s.size();
      for (int loops = 0; loops + points <= n; ++loops) {
        std::vector<std::vector<int>> extras;
        std::vector<int> current;
        compositions(n - loops - points, points, current, extras);
        for (auto& sizes : extras) {
          for (int& x : sizes) ++x;
          Matroid m = inflate(s, sizes, loops);
          std::string form = canonical_form(m);
          forms.emplace(std::move(form), std::move(m));
        }
      }
    }
  }
  return values(forms);
}

std::vector<Matroid> all_matroids(int n) {
  require_range(n, 0, kMaxFullCorpus, "full matroid corpus");
  FormMap forms;
  for (const Matroid& m : matroids_rank_at_most3(n)) {
    forms.emplace(canonical_form(m), m);
    Matroid d = dual(m);
    std::string form = canonical_form(d);
    forms.emplace(std::move(form), std::move(d));
  }
  return values(forms);
}

}  // namespace pkit
