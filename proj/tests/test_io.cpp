#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "positroidkit/constructions.hpp"
#include "positroidkit/errors.hpp"
#include "positroidkit/matroid_io.hpp"

using namespace pkit;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_matroid(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kParse);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("text format is exact") {
  CHECK(to_text(uniform(2, 3)) == "matroid 3 2\n0 1\n0 2\n1 2\n");
  CHECK(to_text(uniform(0, 2)) == "matroid 2 0\n");
  CHECK(to_text(uniform(1, 1)) == "matroid 1 1\n0\n");
}

TEST_CASE("round trip") {
  for (const Matroid& m : oracle::small_corpus()) {
    const std::string text = to_text(m);
    const Matroid back = parse_matroid(text);
    CHECK(back == m);
    CHECK(to_text(back) == text);
  }
}

TEST_CASE("comments, blank lines and streams of blocks") {
  const std::string text =
      "# two matroids\n"
      "matroid 3 2  # header\n"
      "0 1\n"
      "0 2 # basis\n"
      "\n"
      "matroid 2 0\n"
      "\n"
      "matroid 2 1\n"
      "0\n"
      "1\n";
  std::istringstream in(text);
  const auto all = read_matroids(in);
  REQUIRE(all.size() == 3);
  CHECK(all[0].bases().size() == 2);
  CHECK(all[0].loops().empty());
  CHECK(all[1].rank() == 0);
  CHECK(all[1].loops() == ElementSet{0, 1});
  CHECK(all[2] == uniform(1, 2));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error("matroid 3\n0 1\n").find("line 1") != std::string::npos);
  CHECK(parse_error("matroid 3 2\n0 1\n0 x\n").find("line 3") != std::string::npos);
  CHECK(parse_error("matroid 3 2\n0 1\n1 0\n").find("line 3") != std::string::npos);
  CHECK(parse_error("matroid 3 2\n0 1\n0 5\n").find("line 3") != std::string::npos);
  CHECK(parse_error("# c\nmatroid 3 2\n0\n").find("line 3") != std::string::npos);
  CHECK(parse_error("basis 0 1\n").find("line 1") != std::string::npos);
  CHECK(parse_error("matroid 20 2\n").find("line 1") != std::string::npos);
  CHECK(parse_error("matroid 3 2\n").find("line 1") != std::string::npos);
  // Basis exchange failure is reported at the header.
  CHECK(parse_error("\nmatroid 4 2\n0 1\n2 3\n").find("line 2") != std::string::npos);
  CHECK_FALSE(parse_error("").empty());
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "positroidkit_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "m6.matroid").string();
  save_matroid(path, catalog(CatalogId::kM6));
  CHECK(load_matroid(path) == catalog(CatalogId::kM6));
  CHECK_THROWS_AS(load_matroid((dir / "missing.matroid").string()), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("catalog golden files") {
  for (CatalogId id : kAllCatalogIds) {
    const std::string path = std::string(PKIT_GOLDEN_DIR) + "/" + to_string(id) + ".matroid";
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK_MESSAGE(buffer.str() == to_text(catalog(id)), path);
  }
}
