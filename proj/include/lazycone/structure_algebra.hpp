// Finite-dimensional unital algebras over Q, given by structure
// constants: e_i * e_j = sum_k c[i][j][k] e_k, with the unit expressed
// in the same basis. Ships a validator (associativity + unit laws, first
// violation reported), the desk-scale builtins, and a structured-text
// file format.
//
// File format (JSON): {"dim": d, "unit": [d rationals], "table": t}
// where t[i][j] is the d-vector of coordinates of e_i * e_j and every
// rational is written "p" or "p/q" (plain JSON integers also accepted).

#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lazycone/rational.hpp"

namespace lazycone {

struct StructureAlgebra {
  std::string name;  // diagnostic label, e.g. "mat2" or a file name
  std::size_t dim = 0;
  std::vector<Rational> table;  // flattened c[i][j][k], k fastest
  std::vector<Rational> unit;   // u[k]

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return table[(i * dim + j) * dim + k];
  }
  Rational& c(std::size_t i, std::size_t j, std::size_t k) {
    return table[(i * dim + j) * dim + k];
  }
};

// Outcome of validate_algebra; when not ok, `kind` plus the indices
// identify the first violated instance.
struct AlgebraVerdict {
  enum class Kind { ok, shape, associativity, left_unit, right_unit };
  Kind kind = Kind::ok;
  std::size_t i = 0, j = 0, k = 0, l = 0;

  bool ok() const { return kind == Kind::ok; }
  std::string describe() const {
    switch (kind) {
      case Kind::ok:
        return "valid";
      case Kind::shape:
        return "structure tables have the wrong size for the declared dimension";
      case Kind::associativity:
        return "associativity fails at (i,j,k,l) = (" + std::to_string(i) + "," +
               std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
      case Kind::left_unit:
        return "left unit law fails at (j,k) = (" + std::to_string(j) + "," +
               std::to_string(k) + ")";
      case Kind::right_unit:
        return "right unit law fails at (j,k) = (" + std::to_string(j) + "," +
               std::to_string(k) + ")";
    }
    return "";
  }
};

// Exact check of sum_m c[i][j][m] c[m][k][l] = sum_m c[j][k][m] c[i][m][l]
// for all (i,j,k,l), and of both unit laws; returns the first violation.
inline AlgebraVerdict validate_algebra(const StructureAlgebra& alg) {
  const std::size_t d = alg.dim;
  if (alg.table.size() != d * d * d || alg.unit.size() != d)
    return {AlgebraVerdict::Kind::shape, 0, 0, 0, 0};
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const Rational delta(j == k ? 1 : 0);
      Rational left(0), right(0);
      for (std::size_t i = 0; i < d; ++i) {
        left += alg.unit[i] * alg.c(i, j, k);
        right += alg.unit[i] * alg.c(j, i, k);
      }
      if (left != delta)
        return {AlgebraVerdict::Kind::left_unit, 0, j, k, 0};
      if (right != delta)
        return {AlgebraVerdict::Kind::right_unit, 0, j, k, 0};
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          Rational lhs(0), rhs(0);
          for (std::size_t m = 0; m < d; ++m) {
            lhs += alg.c(i, j, m) * alg.c(m, k, l);
            rhs += alg.c(j, k, m) * alg.c(i, m, l);
          }
          if (lhs != rhs)
            return {AlgebraVerdict::Kind::associativity, i, j, k, l};
        }
  return {};
}

// --- builtins ------------------------------------------------------------

// Q itself.
inline StructureAlgebra scalar_algebra() {
  StructureAlgebra alg;
  alg.name = "scalar";
  alg.dim = 1;
  alg.table = {Rational(1)};
  alg.unit = {Rational(1)};
  return alg;
}

// M_k(Q) on the matrix-unit basis e_{ab}, index a*k + b.
inline StructureAlgebra matrix_algebra(std::size_t k) {
  StructureAlgebra alg;
  alg.name = "mat" + std::to_string(k);
  alg.dim = k * k;
  alg.table.assign(alg.dim * alg.dim * alg.dim, Rational(0));
  alg.unit.assign(alg.dim, Rational(0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t e = 0; e < k; ++e)
          if (b == c)
            alg.c(a * k + b, c * k + e, a * k + e) = 1;
  for (std::size_t a = 0; a < k; ++a)
    alg.unit[a * k + a] = 1;
  return alg;
}

// Q^k with componentwise product.
inline StructureAlgebra componentwise_algebra(std::size_t k) {
  StructureAlgebra alg;
  alg.name = "qq" + std::to_string(k);
  alg.dim = k;
  alg.table.assign(k * k * k, Rational(0));
  alg.unit.assign(k, Rational(1));
  for (std::size_t i = 0; i < k; ++i)
    alg.c(i, i, i) = 1;
  return alg;
}

// Upper-triangular k x k matrices on the basis e_{ab}, a <= b, ordered
// (0,0), (0,1), ..., (k-1,k-1).
inline StructureAlgebra upper_triangular_algebra(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b)
      basis.emplace_back(a, b);

  StructureAlgebra alg;
  alg.name = "tri" + std::to_string(k);
  alg.dim = basis.size();
  alg.table.assign(alg.dim * alg.dim * alg.dim, Rational(0));
  alg.unit.assign(alg.dim, Rational(0));
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j) {
      if (basis[i].second != basis[j].first)
        continue;
      const std::pair<std::size_t, std::size_t> prod{basis[i].first, basis[j].second};
      for (std::size_t l = 0; l < alg.dim; ++l)
        if (basis[l] == prod)
          alg.c(i, j, l) = 1;
    }
  for (std::size_t l = 0; l < alg.dim; ++l)
    if (basis[l].first == basis[l].second)
      alg.unit[l] = 1;
  return alg;
}

// CLI builtin names.
inline StructureAlgebra builtin_algebra(const std::string& name) {
  if (name == "scalar")
    return scalar_algebra();
  if (name == "mat2")
    return matrix_algebra(2);
  if (name == "mat3")
    return matrix_algebra(3);
  if (name == "qq2")
    return componentwise_algebra(2);
  if (name == "tri2")
    return upper_triangular_algebra(2);
  throw std::invalid_argument("unknown builtin algebra: " + name);
}

// --- file format ---------------------------------------------------------

struct AlgebraParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Rational json_rational(const nlohmann::json& value, const char* where) {
  if (value.is_number_integer())
    return Rational(value.get<long long>());
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw AlgebraParseError(std::string(where) + ": " + e.what());
    }
  }
  throw AlgebraParseError(std::string(where) + ": expected a rational as \"p\" or \"p/q\"");
}

}  // namespace detail

// Reads the JSON algebra format described at the top of this header;
// throws AlgebraParseError on any malformed input.
inline StructureAlgebra parse_algebra(std::istream& in, std::string name = "algebra") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraParseError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("unit") ||
      !doc.contains("table"))
    throw AlgebraParseError("expected an object with fields dim, unit, table");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
    throw AlgebraParseError("dim must be a positive integer");

  StructureAlgebra alg;
  alg.name = std::move(name);
  alg.dim = doc["dim"].get<std::size_t>();
  const std::size_t d = alg.dim;

  const nlohmann::json& unit = doc["unit"];
  if (!unit.is_array() || unit.size() != d)
    throw AlgebraParseError("unit must be an array of dim rationals");
  for (const auto& u : unit)
    alg.unit.push_back(detail::json_rational(u, "unit"));

  const nlohmann::json& table = doc["table"];
  if (!table.is_array() || table.size() != d)
    throw AlgebraParseError("table must be a dim x dim array of dim-vectors");
  alg.table.reserve(d * d * d);
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != d)
      throw AlgebraParseError("table must be a dim x dim array of dim-vectors");
    for (const auto& cell : row) {
      if (!cell.is_array() || cell.size() != d)
        throw AlgebraParseError("each table cell must be a dim-vector of rationals");
      for (const auto& coeff : cell)
        alg.table.push_back(detail::json_rational(coeff, "table"));
    }
  }
  return alg;
}

}  // namespace lazycone
