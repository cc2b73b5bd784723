#include "lazycone/cyclic.hpp"

#include <random>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "lazycone/linalg.hpp"
#include "lazycone/structure_algebra.hpp"

using namespace lazycone;

namespace {

Cochain random_cochain(const StructureAlgebra& alg, std::size_t degree, std::uint64_t seed) {
  Cochain phi = Cochain::zero(degree, alg.dim);
  std::mt19937_64 gen(seed);
  for (Rational& x : phi.coeffs) {
    const int p = static_cast<int>(gen() % 7) - 3;
    const int q = static_cast<int>(gen() % 2) + 1;
    x = Rational(p, q);
  }
  return phi;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const Rational& x : v)
    if (x != 0)
      return false;
  return true;
}

// Independent oracle for the trace-space dimension: tracial functionals
// are the annihilator of the span of commutators [e_i, e_j], so the
// dimension is d minus the (Bareiss) rank of the commutator coordinate
// vectors. trace_space itself goes through the RREF nullspace engine.
std::size_t trace_dim_by_commutators(const StructureAlgebra& alg) {
  const std::size_t d = alg.dim;
  RatMatrix commutators;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Rational> row(d);
      for (std::size_t k = 0; k < d; ++k)
        row[k] = alg.c(i, j, k) - alg.c(j, i, k);
      commutators.push_back(std::move(row));
    }
  return d - rank_exact(commutators);
}

// Transport the structure constants along the basis change e'_i = sum_a
// P[i][a] e_a. A valid algebra stays valid and all dimensions computed
// here are invariants.
StructureAlgebra change_basis(const StructureAlgebra& alg, const RatMatrix& p) {
  const std::size_t d = alg.dim;
  const RatMatrix q = *inverse(p);
  StructureAlgebra out;
  out.name = alg.name + "-transported";
  out.dim = d;
  out.table.assign(d * d * d, Rational(0));
  out.unit.assign(d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          if (p[i][a] == 0 || p[j][b] == 0)
            continue;
          for (std::size_t m = 0; m < d; ++m) {
            if (alg.c(a, b, m) == 0)
              continue;
            const Rational coeff = p[i][a] * p[j][b] * alg.c(a, b, m);
            for (std::size_t k = 0; k < d; ++k)
              out.c(i, j, k) += coeff * q[m][k];
          }
        }
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t k = 0; k < d; ++k)
      out.unit[k] += alg.unit[m] * q[m][k];
  return out;
}

RatMatrix random_invertible(std::size_t d, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  while (true) {
    RatMatrix p(d, std::vector<Rational>(d));
    for (auto& row : p)
      for (Rational& x : row)
        x = Rational(static_cast<int>(gen() % 5) - 2);
    if (inverse(p))
      return p;
  }
}

}  // namespace

TEST_CASE("builtin algebras validate") {
  for (const char* name : {"scalar", "mat2", "mat3", "qq2", "tri2"}) {
    const StructureAlgebra alg = builtin_algebra(name);
    const AlgebraVerdict verdict = validate_algebra(alg);
    INFO(name << ": " << verdict.describe());
    CHECK(verdict.ok());
  }
  CHECK_THROWS_AS(builtin_algebra("mat7"), std::invalid_argument);
}

TEST_CASE("perturbed structure constants fail associativity with a concrete witness") {
  StructureAlgebra alg = matrix_algebra(2);
  alg.c(1, 2, 0) += 1;  // e01 * e10 gains a spurious component
  const AlgebraVerdict verdict = validate_algebra(alg);
  REQUIRE_FALSE(verdict.ok());
  if (verdict.kind == AlgebraVerdict::Kind::associativity) {
    // Re-check the reported instance directly against the tables.
    Rational lhs(0), rhs(0);
    for (std::size_t m = 0; m < alg.dim; ++m) {
      lhs += alg.c(verdict.i, verdict.j, m) * alg.c(m, verdict.k, verdict.l);
      rhs += alg.c(verdict.j, verdict.k, m) * alg.c(verdict.i, m, verdict.l);
    }
    CHECK(lhs != rhs);
  }
}

TEST_CASE("scaling the unit representation breaks the unit law") {
  StructureAlgebra alg = matrix_algebra(2);
  for (Rational& u : alg.unit)
    u *= 2;
  const AlgebraVerdict verdict = validate_algebra(alg);
  REQUIRE_FALSE(verdict.ok());
  CHECK((verdict.kind == AlgebraVerdict::Kind::left_unit ||
         verdict.kind == AlgebraVerdict::Kind::right_unit));
}

TEST_CASE("trace-space dimensions match the commutator-span oracle") {
  const struct {
    const char* name;
    std::size_t expected;
  } cases[] = {{"mat2", 1}, {"mat3", 1}, {"qq2", 2}, {"tri2", 2}, {"scalar", 1}};
  for (const auto& c : cases) {
    const StructureAlgebra alg = builtin_algebra(c.name);
    const Subspace traces = trace_space(alg);
    INFO(c.name);
    CHECK(traces.rank() == c.expected);
    CHECK(traces.rank() == trace_dim_by_commutators(alg));
    CHECK(traces.is_independent());
    // Trace functionals are exactly the degree-0 kernel of b.
    for (const std::vector<Rational>& tau : traces.basis)
      CHECK(all_zero(hochschild_coboundary(alg, Cochain{0, alg.dim, tau}).coeffs));
  }
}

TEST_CASE("cyclic subspaces of tiny algebras") {
  const StructureAlgebra scalar = scalar_algebra();
  CHECK(cyclic_subspace(scalar, 1).rank() == 0);   // phi(x,y) = -phi(y,x) forces 0
  CHECK(cyclic_subspace(scalar, 2).rank() == 1);   // lambda acts trivially with sign +1
  CHECK(cyclic_subspace(componentwise_algebra(2), 0).rank() == 2);
  for (std::size_t n = 0; n <= 2; ++n)
    CHECK(cyclic_subspace(scalar, n).ambient == 1);
}

TEST_CASE("coboundary of the scalar basis 2-cochain vanishes") {
  const StructureAlgebra scalar = scalar_algebra();
  Cochain phi = Cochain::zero(2, 1);
  phi.coeffs[0] = 1;
  CHECK(all_zero(hochschild_coboundary(scalar, phi).coeffs));
}

TEST_CASE("coboundary squares to zero on random cochains") {
  const StructureAlgebra algebras[] = {scalar_algebra(), componentwise_algebra(2),
                                       upper_triangular_algebra(2)};
  for (const StructureAlgebra& alg : algebras)
    for (std::size_t n = 0; n <= 2; ++n)
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const Cochain phi = random_cochain(alg, n, seed * 31 + n);
        const Cochain b1 = hochschild_coboundary(alg, phi);
        CHECK(all_zero(hochschild_coboundary(alg, b1).coeffs));
      }
}

TEST_CASE("coboundary maps cyclic cochains to cyclic cochains") {
  const StructureAlgebra algebras[] = {componentwise_algebra(2), upper_triangular_algebra(2),
                                       matrix_algebra(2)};
  for (const StructureAlgebra& alg : algebras)
    for (std::size_t n = 0; n <= 2; ++n) {
      const Subspace cn = cyclic_subspace(alg, n);
      for (const std::vector<Rational>& vec : cn.basis) {
        const Cochain phi{n, alg.dim, vec};
        REQUIRE(is_cyclic(phi));
        CHECK(is_cyclic(hochschild_coboundary(alg, phi)));
      }
    }
}

TEST_CASE("cyclic cohomology dimensions of the scalar algebra and of mat2") {
  const StructureAlgebra scalar = scalar_algebra();
  CHECK(hc_dimension(scalar, 0) == 1);
  CHECK(hc_dimension(scalar, 1) == 0);
  CHECK(hc_dimension(scalar, 2) == 1);

  const StructureAlgebra mat2 = matrix_algebra(2);
  CHECK(hc_dimension(mat2, 0) == 1);
  CHECK(hc_dimension(mat2, 1) == 0);
  // Same values: the Morita contrast between mat2 and the scalars.
  CHECK(hc_dimension(mat2, 0) == hc_dimension(scalar, 0));
  CHECK(hc_dimension(mat2, 1) == hc_dimension(scalar, 1));

  CHECK(hc_dimension(componentwise_algebra(2), 0) == 2);
}

TEST_CASE("hc dimensions are invariant under a change of basis") {
  const StructureAlgebra algebras[] = {componentwise_algebra(2), upper_triangular_algebra(2)};
  for (const StructureAlgebra& alg : algebras) {
    const StructureAlgebra moved = change_basis(alg, random_invertible(alg.dim, 97 + alg.dim));
    REQUIRE(validate_algebra(moved).ok());
    CHECK(trace_space(moved).rank() == trace_space(alg).rank());
    for (std::size_t n = 0; n <= 2; ++n)
      CHECK(hc_dimension(moved, n) == hc_dimension(alg, n));
  }
}

TEST_CASE("degree and coefficient caps guard the tensors") {
  const StructureAlgebra mat3 = matrix_algebra(3);
  CHECK_THROWS_AS(cyclic_subspace(mat3, 2), DegreeCapError);       // 9^3 = 729 > 256
  CHECK_THROWS_AS(cyclic_subspace(scalar_algebra(), 4), DegreeCapError);  // above max degree
  CyclicLimits wide;
  wide.max_coefficients = 1000;
  CHECK(cyclic_subspace(mat3, 2, wide).ambient == 729);
}

TEST_CASE("algebra files parse and validate") {
  const std::string qq2_json = R"({
    "dim": 2,
    "unit": ["1", "1"],
    "table": [[["1", "0"], ["0", "0"]], [["0", "0"], [0, "1"]]]
  })";
  std::istringstream in(qq2_json);
  const StructureAlgebra parsed = parse_algebra(in, "qq2-file");
  CHECK(parsed.dim == 2);
  CHECK(parsed.table == componentwise_algebra(2).table);
  CHECK(parsed.unit == componentwise_algebra(2).unit);
  CHECK(validate_algebra(parsed).ok());

  const auto reject = [](const std::string& text) {
    std::istringstream bad(text);
    CHECK_THROWS_AS(parse_algebra(bad), AlgebraParseError);
  };
  reject("not json at all");
  reject(R"({"dim": 1, "unit": ["1"]})");                                  // missing table
  reject(R"({"dim": 0, "unit": [], "table": []})");                        // dim < 1
  reject(R"({"dim": 1, "unit": ["1/0"], "table": [[["1"]]]})");            // zero denominator
  reject(R"({"dim": 1, "unit": ["x"], "table": [[["1"]]]})");              // not a rational
  reject(R"({"dim": 2, "unit": ["1", "1"], "table": [[["1"]]]})");         // wrong shape
  reject(R"({"dim": 1, "unit": [true], "table": [[["1"]]]})");             // wrong type
}
