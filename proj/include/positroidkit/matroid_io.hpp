#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "positroidkit/matroid.hpp"

namespace pkit {

// Text format:
//
//   matroid <n> <rank>
//   0 1
//   0 2
//   ...
//
// One basis per line as strictly increasing 0-based indices, bases in
// lexicographic order. '#' starts a comment; a blank line ends the block.
// A rank-0 matroid has the single basis {} and is written with no basis
// lines.

std::string to_text(const Matroid& m);
void write_matroid(std::ostream& out, const Matroid& m);

/// Reads every matroid block in the stream. Throws Error(kParse) with the
/// 1-based line number on malformed input, and the matroid validation
/// errors for families that fail basis exchange.
std::vector<Matroid> read_matroids(std::istream& in);
Matroid parse_matroid(const std::string& text);
Matroid load_matroid(const std::string& path);
void save_matroid(const std::string& path, const Matroid& m);

}  // namespace pkit
