// Exact rational linear algebra: fraction-free rank, reduced row
// echelon form, nullspace bases and small inverses. Everything works on
// dense row-major matrices of Rational; no floating point anywhere.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lazycone/rational.hpp"

namespace lazycone {

using RatMatrix = std::vector<std::vector<Rational>>;

namespace detail {

inline std::size_t column_count(const RatMatrix& rows) {
  if (rows.empty())
    return 0;
  const std::size_t cols = rows.front().size();
  for (const auto& row : rows)
    if (row.size() != cols)
      throw std::invalid_argument("linalg: ragged matrix");
  return cols;
}

}  // namespace detail

// Rank by one-step (Bareiss) fraction-free elimination: rows are scaled
// to integers, every intermediate value is a minor of the scaled matrix,
// and each division is exact. Column pivoting handles rank-deficient
// input.
inline std::size_t rank_exact(const RatMatrix& input) {
  const std::size_t cols = detail::column_count(input);
  const std::size_t n = input.size();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < n; ++i) {
    BigInt scale = 1;
    for (const Rational& x : input[i])
      scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(x));
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = boost::multiprecision::numerator(input[i][j]) *
                (scale / boost::multiprecision::denominator(input[i][j]));
  }

  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && a[pivot][col] == 0)
      ++pivot;
    if (pivot == n)
      continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// In-place reduced row echelon form; returns the pivot column indices in
// increasing order.
inline std::vector<std::size_t> rref(RatMatrix& a) {
  const std::size_t cols = detail::column_count(a);
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < cols && next_row < a.size(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < a.size() && a[pivot][col] == 0)
      ++pivot;
    if (pivot == a.size())
      continue;
    std::swap(a[next_row], a[pivot]);
    const Rational inv = Rational(1) / a[next_row][col];
    for (std::size_t j = col; j < cols; ++j)
      a[next_row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == next_row || a[i][col] == 0)
        continue;
      const Rational factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j)
        a[i][j] -= factor * a[next_row][j];
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

// A linear subspace of Q^ambient given by independent basis rows.
struct Subspace {
  std::size_t ambient = 0;
  RatMatrix basis;

  std::size_t rank() const { return basis.size(); }
  bool is_independent() const { return rank_exact(basis) == basis.size(); }
};

// Basis of {x : M x = 0}; `ambient` is the number of unknowns, so an
// empty constraint list yields the standard basis. Basis vectors are the
// canonical free-variable solutions of the RREF, ordered by free column.
inline Subspace nullspace(RatMatrix constraints, std::size_t ambient) {
  if (!constraints.empty() && detail::column_count(constraints) != ambient)
    throw std::invalid_argument("nullspace: constraint width differs from ambient dimension");
  const std::vector<std::size_t> pivots = rref(constraints);

  Subspace space;
  space.ambient = ambient;
  std::size_t next_pivot = 0;
  for (std::size_t col = 0; col < ambient; ++col) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    std::vector<Rational> vec(ambient, Rational(0));
    vec[col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      vec[pivots[r]] = -constraints[r][col];
    space.basis.push_back(std::move(vec));
  }
  return space;
}

// Inverse by Gauss-Jordan on [A | I]; nullopt when A is singular.
inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  if (detail::column_count(a) != n)
    throw std::invalid_argument("inverse: matrix must be square");
  RatMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  const std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
    return std::nullopt;
  RatMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace lazycone
