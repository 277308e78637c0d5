#include "positroidkit/oriented.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "positroidkit/errors.hpp"

namespace pkit {

using BigInt = boost::multiprecision::cpp_int;

Chirotope chirotope_from_table(int n, int r, std::vector<std::int8_t> table) {
  if (std::all_of(table.begin(), table.end(), [](std::int8_t s) { return s == 0; })) {
    throw Error(ErrorKind::kNotAChirotope, "chirotope is identically zero");
  }
  return Chirotope(n, r, std::move(table));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_int(std::string_view s, int line) {
  std::int64_t value = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    parse_error(line, "bad integer '" + std::string(s) + "'");
  }
  return value;
}

Fraction parse_entry(std::string_view token, int line) {
  token = trim(token);
  if (token.find_first_of(".eE") != std::string_view::npos) {
    parse_error(line, "floating-point entry '" + std::string(token) +
                          "' rejected; use integers or p/q");
  }
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return Fraction{parse_int(token, line), 1};
  const Fraction f{parse_int(trim(token.substr(0, slash)), line),
                   parse_int(trim(token.substr(slash + 1)), line)};
  if (f.den == 0) parse_error(line, "zero denominator");
  return f;
}

int sign_of(const BigInt& x) { return x.sign(); }

// Bareiss elimination; exact for integer input.
int determinant_sign(std::vector<std::vector<BigInt>> a) {
  const std::size_t k = a.size();
  if (k == 0) return 1;
  int flips = 0;
  BigInt prev = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (a[i][i] == 0) {
      std::size_t p = i + 1;
      while (p < k && a[p][i] == 0) ++p;
      if (p == k) return 0;
      std::swap(a[i], a[p]);
      ++flips;
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      for (std::size_t c = i + 1; c < k; ++c) {
        a[j][c] = (a[j][c] * a[i][i] - a[j][i] * a[i][c]) / prev;
      }
      a[j][i] = 0;
    }
    prev = a[i][i];
  }
  const int s = sign_of(a[k - 1][k - 1]);
  return flips % 2 == 0 ? s : -s;
}

// Sign of the permutation sorting `tuple`; 0 on repeats.
int sort_parity(std::vector<int>& tuple) {
  int parity = 1;
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return 0;
      std::swap(tuple[j - 1], tuple[j]);
      parity = -parity;
    }
  }
  return parity;
}

// Maps each kept element to its rank within `kept`.
std::vector<int> compress(ElementSet kept, int n) {
  std::vector<int> index(n, -1);
  int next = 0;
  for (int e : kept) index[e] = next++;
  return index;
}

ElementSet relabel_set(ElementSet s, const std::vector<int>& index) {
  ElementSet out;
  for (int e : s) out = out.with(index[e]);
  return out;
}

// Largest clique of the graph given by adjacency masks, restricted to `pool`.
ElementSet max_clique(const std::vector<ElementSet>& adj, ElementSet pool) {
  ElementSet best;
  auto expand = [&](auto&& self, ElementSet clique, ElementSet cand) -> void {
    if (cand.empty()) {
      if (clique.size() > best.size()) best = clique;
      return;
    }
    if (clique.size() + cand.size() <= best.size()) return;
    // Branch on the first candidate: include it, or exclude it.
    const int v = cand.first();
    self(self, clique.with(v), cand & adj[v]);
    self(self, clique, cand.without(v));
  };
  expand(expand, ElementSet{}, pool);
  return best;
}

// Edge x < y iff the rank-2 chirotope gives the pair sign `polarity`.
std::vector<ElementSet> sign_graph(const Chirotope& line, int polarity) {
  const int size = line.size();
  std::vector<ElementSet> adj(size);
  for (int x = 0; x < size; ++x) {
    for (int y = x + 1; y < size; ++y) {
      if (line.sign(ElementSet{x, y}) == polarity) {
        adj[x] = adj[x].with(y);
        adj[y] = adj[y].with(x);
      }
    }
  }
  return adj;
}

void check_element(const Chirotope& chi, int e) {
  if (e < 0 || e >= chi.size()) {
    throw Error(ErrorKind::kInvalidSubset, "element " + std::to_string(e) +
                                               " outside ground set of size " +
                                               std::to_string(chi.size()));
  }
}

}  // namespace

ExactMatrix parse_matrix_csv(std::string_view text) {
  ExactMatrix rows;
  int line_no = 0;
  std::size_t width = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    std::vector<Fraction> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      row.push_back(parse_entry(line.substr(start, comma - start), line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != width) {
      parse_error(line_no, "expected " + std::to_string(width) + " entries, got " +
                               std::to_string(row.size()));
    }
    width = row.size();
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::kParse, "matrix file has no rows");
  return rows;
}

ExactMatrix load_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_csv(buffer.str());
}

Chirotope Chirotope::from_sign_string(int n, int r, std::string_view signs) {
  if (n < 0 || n > kMaxGround || r < 0 || r > n) {
    throw Error(ErrorKind::kInvalidInput, "bad chirotope dimensions");
  }
  const auto subsets = k_subsets(n, r);
  if (signs.size() != subsets.size()) {
    throw Error(ErrorKind::kInvalidInput,
                "expected " + std::to_string(subsets.size()) + " signs, got " +
                    std::to_string(signs.size()));
  }
  std::vector<std::int8_t> table(std::size_t{1} << n, 0);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    switch (signs[i]) {
      case '+': table[subsets[i].bits()] = 1; break;
      case '-': table[subsets[i].bits()] = -1; break;
      case '0': break;
      default:
        throw Error(ErrorKind::kInvalidInput,
                    std::string("bad sign character '") + signs[i] + "'");
    }
  }
  return chirotope_from_table(n, r, std::move(table));
}

int Chirotope::sign(ElementSet s) const {
  if (!s.within(n_) || s.size() != r_) return 0;
  return table_[s.bits()];
}

int Chirotope::sign(std::span<const int> tuple) const {
  std::vector<int> sorted(tuple.begin(), tuple.end());
  for (int e : sorted) {
    if (e < 0 || e >= n_) return 0;
  }
  const int parity = sort_parity(sorted);
  if (parity == 0) return 0;
  return parity * sign(ElementSet::from_vector(sorted));
}

Chirotope Chirotope::negated() const {
  std::vector<std::int8_t> table(table_);
  for (auto& s : table) s = static_cast<std::int8_t>(-s);
  return Chirotope(n_, r_, std::move(table));
}

std::string Chirotope::to_sign_string() const {
  std::string out;
  for (ElementSet s : k_subsets(n_, r_)) {
    const int v = table_[s.bits()];
    out.push_back(v > 0 ? '+' : v < 0 ? '-' : '0');
  }
  return out;
}

Chirotope chirotope_from_matrix(const ExactMatrix& a) {
  if (a.empty() || a.front().empty()) {
    throw Error(ErrorKind::kInvalidMatrix, "matrix is empty");
  }
  const int r = static_cast<int>(a.size());
  const int n = static_cast<int>(a.front().size());
  if (n > kMaxGround) {
    throw Error(ErrorKind::kInvalidMatrix,
                "at most " + std::to_string(kMaxGround) + " columns supported");
  }
  if (r > n) throw Error(ErrorKind::kInvalidMatrix, "more rows than columns");
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorKind::kInvalidMatrix, "ragged matrix");
    }
    for (const Fraction& f : row) {
      if (f.den == 0) throw Error(ErrorKind::kInvalidMatrix, "zero denominator");
    }
  }
  // Positive column scaling preserves every minor's sign.
  std::vector<std::vector<BigInt>> m(r, std::vector<BigInt>(n));
  for (int c = 0; c < n; ++c) {
    BigInt lcm = 1;
    for (int i = 0; i < r; ++i) {
      const BigInt den = boost::multiprecision::abs(BigInt(a[i][c].den));
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    for (int i = 0; i < r; ++i) {
      const Fraction& f = a[i][c];
      BigInt value = BigInt(f.num) * (lcm / boost::multiprecision::abs(BigInt(f.den)));
      m[i][c] = f.den < 0 ? BigInt(-value) : value;
    }
  }
  std::vector<std::int8_t> table(std::size_t{1} << n, 0);
  bool nonzero = false;
  for (ElementSet cols : k_subsets(n, r)) {
    std::vector<std::vector<BigInt>> sub(r);
    for (int i = 0; i < r; ++i) {
      for (int c : cols) sub[i].push_back(m[i][c]);
    }
    const int s = determinant_sign(std::move(sub));
    table[cols.bits()] = static_cast<std::int8_t>(s);
    nonzero = nonzero || s != 0;
  }
  if (!nonzero) throw Error(ErrorKind::kInvalidMatrix, "matrix does not have full row rank");
  return chirotope_from_table(n, r, std::move(table));
}

Matroid underlying_matroid(const Chirotope& chi) {
  std::vector<ElementSet> bases;
  for (ElementSet s : k_subsets(chi.size(), chi.rank())) {
    if (chi.sign(s) != 0) bases.push_back(s);
  }
  if (!satisfies_basis_exchange(chi.size(), bases)) {
    throw Error(ErrorKind::kNotAChirotope, "support violates basis exchange");
  }
  return Matroid::from_bases_trusted(chi.size(), std::move(bases));
}

Chirotope oriented_contract_set(const Chirotope& chi, ElementSet b) {
  const int n = chi.size();
  if (!b.within(n)) throw Error(ErrorKind::kInvalidSubset, "contraction set out of range");
  const ElementSet rest = b.complement(n);
  const std::vector<int> index = compress(rest, n);
  const int new_rank = chi.rank() - b.size();
  std::vector<std::int8_t> table(std::size_t{1} << rest.size(), 0);
  bool nonzero = false;
  if (new_rank >= 0) {
    const std::vector<int> prefix = b.to_vector();
    for (ElementSet x : k_subsets(n, new_rank)) {
      if (!(x & b).empty()) continue;
      std::vector<int> tuple = prefix;
      for (int e : x) tuple.push_back(e);
      const int s = chi.sign(tuple);
      table[relabel_set(x, index).bits()] = static_cast<std::int8_t>(s);
      nonzero = nonzero || s != 0;
    }
  }
  if (!nonzero) {
    throw Error(ErrorKind::kInvalidContraction,
                "contraction set " + b.to_string() + " is dependent");
  }
  return chirotope_from_table(rest.size(), new_rank, std::move(table));
}

Chirotope oriented_contract(const Chirotope& chi, int e) {
  check_element(chi, e);
  return oriented_contract_set(chi, ElementSet::single(e));
}

Chirotope oriented_delete(const Chirotope& chi, int e) {
  check_element(chi, e);
  const int n = chi.size();
  const ElementSet rest = ElementSet::single(e).complement(n);
  const std::vector<int> index = compress(rest, n);
  std::vector<std::int8_t> table(std::size_t{1} << rest.size(), 0);
  bool nonzero = false;
  for (ElementSet x : k_subsets(n, chi.rank())) {
    if (x.contains(e)) continue;
    const int s = chi.sign(x);
    table[relabel_set(x, index).bits()] = static_cast<std::int8_t>(s);
    nonzero = nonzero || s != 0;
  }
  if (!nonzero) return oriented_contract(chi, e);
  return chirotope_from_table(rest.size(), chi.rank(), std::move(table));
}

std::optional<MonochromaticWitness> monochromatic_line_minor(const Chirotope& chi,
                                                            int k, int polarity) {
  if (k < 2) throw Error(ErrorKind::kInvalidParameters, "need k >= 2");
  if (polarity != 1 && polarity != -1) {
    throw Error(ErrorKind::kInvalidParameters, "polarity must be +1 or -1");
  }
  const Matroid m = underlying_matroid(chi);
  const int r = m.rank();
  if (r < 2) return std::nullopt;
  const FlatLattice lattice = flat_lattice(m);
  for (ElementSet flat : lattice.by_rank[r - 2]) {
    // The flat's non-basis elements become loops of the rank-2 minor and
    // never join an edge.
    const ElementSet basis = m.greedy_basis(flat);
    const Chirotope line = oriented_contract_set(chi, basis);
    const std::vector<int> labels = basis.complement(chi.size()).to_vector();
    const auto adj = sign_graph(line, polarity);
    const ElementSet clique = max_clique(adj, ElementSet::full(line.size()));
    if (clique.size() >= k) {
      MonochromaticWitness w{flat, {}, polarity};
      for (int x : clique) {
        if (static_cast<int>(w.elements.size()) < k) w.elements.push_back(labels[x]);
      }
      return w;
    }
  }
  return std::nullopt;
}

RamseyReport ramsey_scan(const Chirotope& chi, int ell) {
  if (ell < 1) throw Error(ErrorKind::kInvalidParameters, "need l >= 1");
  RamseyReport report;
  report.ell = ell;
  report.target = ell + 2;
  if (ell == 1) report.ramsey_number = 6;
  if (ell == 2) report.ramsey_number = 18;
  const int r = chi.rank();
  if (report.ramsey_number && r >= 2) {
    long long power = 1;
    for (int i = 0; i < r; ++i) power *= *report.ramsey_number;
    report.threshold_printed = (power - 1) / (r - 1);
    report.threshold_projective = (power - 1) / (*report.ramsey_number - 1);
  }
  const Matroid m = underlying_matroid(chi);
  if (r < 2) return report;
  const FlatLattice lattice = flat_lattice(m);
  for (ElementSet flat : lattice.by_rank[r - 2]) {
    const ElementSet basis = m.greedy_basis(flat);
    const Chirotope line = oriented_contract_set(chi, basis);
    const std::vector<int> labels = basis.complement(chi.size()).to_vector();
    const Matroid line_matroid = underlying_matroid(line);
    FlatScan scan;
    scan.flat = flat;
    scan.points = point_count(line_matroid);
    for (int polarity : {1, -1}) {
      const auto adj = sign_graph(line, polarity);
      std::vector<int>& best = polarity > 0 ? scan.best_plus : scan.best_minus;
      for (int x : max_clique(adj, ElementSet::full(line.size()))) best.push_back(labels[x]);
    }
    report.best_plus = std::max(report.best_plus, static_cast<int>(scan.best_plus.size()));
    report.best_minus =
        std::max(report.best_minus, static_cast<int>(scan.best_minus.size()));
    report.flats.push_back(std::move(scan));
  }
  report.found = std::max(report.best_plus, report.best_minus) >= report.target;
  return report;
}

}  // namespace pkit
