#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "lazycone/matrix.hpp"

namespace lazycone::testing {

using Triplet = std::tuple<std::uint64_t, std::uint64_t, Rational>;

// All nonzero entries of a window, row-major, read off the row oracle.
inline std::vector<Triplet> window_entries(const LazyMatrix& m, std::uint64_t window) {
  std::vector<Triplet> out;
  for (std::uint64_t i = 0; i < window; ++i)
    for (const SparseEntry& e : m.row(i)) {
      if (e.index >= window)
        break;
      out.emplace_back(i, e.index, e.value);
    }
  return out;
}

inline LazyMatrix matrix_unit(std::uint64_t i, std::uint64_t j) {
  return from_triplets({{i, j, Rational(1)}});
}

}  // namespace lazycone::testing
