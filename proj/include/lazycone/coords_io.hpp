// Coordinate dump format for matrix windows:
//
//   %window W
//   i j value
//
// one line per nonzero entry with i, j < W, sorted lexicographically by
// (i, j); values are canonical rationals ("p" or "p/q").

#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "lazycone/matrix.hpp"
#include "lazycone/rational.hpp"

namespace lazycone {

struct CoordsError : std::runtime_error {
  CoordsError(std::size_t line, const std::string& why)
      : std::runtime_error("coords line " + std::to_string(line) + ": " + why), line(line) {}
  std::size_t line;
};

inline void write_coords(std::ostream& out, const LazyMatrix& matrix, std::uint64_t window) {
  out << "%window " << window << "\n";
  for (std::uint64_t i = 0; i < window; ++i)
    for (const SparseEntry& e : matrix.row(i)) {
      if (e.index >= window)
        break;
      out << i << " " << e.index << " " << rational_str(e.value) << "\n";
    }
}

struct CoordsWindow {
  std::uint64_t window = 0;
  LazyMatrix matrix = zero_matrix();
};

inline CoordsWindow read_coords(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line))
    throw CoordsError(1, "missing '%window W' header");
  ++lineno;
  std::uint64_t window = 0;
  {
    std::istringstream header(line);
    std::string tag;
    header >> tag >> window;
    if (tag != "%window" || header.fail())
      throw CoordsError(lineno, "expected '%window W' header, got '" + line + "'");
  }

  std::vector<std::tuple<std::uint64_t, std::uint64_t, Rational>> triplets;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> positions;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    std::istringstream fields(line);
    std::uint64_t i = 0, j = 0;
    std::string value_text;
    fields >> i >> j >> value_text;
    std::string extra;
    if (fields.fail() || value_text.empty() || (fields >> extra))
      throw CoordsError(lineno, "expected 'i j value', got '" + line + "'");
    if (i >= window || j >= window)
      throw CoordsError(lineno, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") lies outside window " + std::to_string(window));
    Rational value;
    try {
      value = parse_rational(value_text);
    } catch (const std::invalid_argument& err) {
      throw CoordsError(lineno, err.what());
    }
    if (value == 0)
      throw CoordsError(lineno, "explicit zero entry");
    positions.emplace_back(i, j);
    triplets.emplace_back(i, j, value);
  }

  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end())
    throw CoordsError(lineno, "duplicate entry position");

  return {window, from_triplets(triplets)};
}

}  // namespace lazycone
