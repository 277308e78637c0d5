#include "positroidkit/matroid_io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "positroidkit/errors.hpp"

namespace pkit {
namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  std::string body = hash == std::string::npos ? line : line.substr(0, hash);
  const auto last = body.find_last_not_of(" \t\r");
  return last == std::string::npos ? std::string() : body.substr(0, last + 1);
}

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

void write_matroid(std::ostream& out, const Matroid& m) {
  out << "matroid " << m.size() << ' ' << m.rank() << '\n';
  if (m.rank() == 0) return;
  for (ElementSet b : m.bases()) {
    bool first = true;
    for (int e : b) {
      if (!first) out << ' ';
      out << e;
      first = false;
    }
    out << '\n';
  }
}

std::string to_text(const Matroid& m) {
  std::ostringstream out;
  write_matroid(out, m);
  return out.str();
}

std::vector<Matroid> read_matroids(std::istream& in) {
  std::vector<Matroid> out;
  std::string raw;
  int line_no = 0;
  struct Block {
    int n = 0;
    int rank = 0;
    int header_line = 0;
    std::vector<ElementSet> bases;
  };
  std::optional<Block> block;

  auto finish = [&]() {
    if (!block) return;
    if (block->rank == 0 && block->bases.empty()) block->bases.push_back({});
    if (block->bases.empty()) fail(block->header_line, "matroid has no bases");
    try {
      out.push_back(Matroid::from_bases(block->n, std::move(block->bases)));
    } catch (const Error& e) {
      fail(block->header_line, e.what());
    }
    block.reset();
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const bool blank_raw = is_blank(raw);
    const std::string line = strip_comment(raw);
    if (blank_raw) {
      finish();
      continue;
    }
    if (is_blank(line)) continue;  // comment-only line
    std::istringstream fields(line);
    if (block && line.rfind("matroid", 0) == 0) finish();
    if (!block) {
      std::string word;
      Block b;
      b.header_line = line_no;
      if (!(fields >> word) || word != "matroid") {
        fail(line_no, "expected 'matroid <n> <rank>'");
      }
      if (!(fields >> b.n >> b.rank)) fail(line_no, "expected 'matroid <n> <rank>'");
      std::string extra;
      if (fields >> extra) fail(line_no, "trailing text after header");
      if (b.n < 0 || b.n > kMaxGround) {
        fail(line_no, "ground set size must be in 0.." + std::to_string(kMaxGround));
      }
      if (b.rank < 0 || b.rank > b.n) fail(line_no, "rank outside 0..n");
      block = std::move(b);
      continue;
    }
    ElementSet basis;
    int previous = -1;
    std::string token;
    while (fields >> token) {
      int e = 0;
      try {
        std::size_t used = 0;
        e = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        fail(line_no, "not an element index: '" + token + "'");
      }
      if (e < 0 || e >= block->n) fail(line_no, "element " + token + " out of range");
      if (e <= previous) fail(line_no, "indices must be strictly increasing");
      previous = e;
      basis = basis.with(e);
    }
    if (basis.size() != block->rank) {
      fail(line_no, "basis has " + std::to_string(basis.size()) +
                        " elements, expected " + std::to_string(block->rank));
    }
    block->bases.push_back(basis);
  }
  finish();
  return out;
}

Matroid parse_matroid(const std::string& text) {
  std::istringstream in(text);
  auto all = read_matroids(in);
  if (all.size() != 1) {
    throw Error(ErrorKind::kParse,
                "expected one matroid, found " + std::to_string(all.size()));
  }
  return all.front();
}

Matroid load_matroid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  auto all = read_matroids(in);
  if (all.size() != 1) {
    throw Error(ErrorKind::kParse, path + ": expected one matroid, found " +
                                       std::to_string(all.size()));
  }
  return all.front();
}

void save_matroid(const std::string& path, const Matroid& m) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kParse, "cannot write " + path);
  write_matroid(out, m);
}

}  // namespace pkit
