#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "helpers.hpp"
#include "lazycone/matrix.hpp"
#include "lazycone/witnesses.hpp"

using namespace lazycone;
using lazycone::testing::window_entries;

namespace {

void require_equal_on(const LazyMatrix& a, const LazyMatrix& b, std::uint64_t window) {
  const EqResult eq = eq_window(a, b, window);
  INFO(describe(eq));
  REQUIRE(eq.equal);
}

}  // namespace

TEST_CASE("identity entries") {
  const LazyMatrix id = identity_matrix();
  CHECK(id.entry(5, 5) == 1);
  CHECK(id.entry(5, 6) == 0);
}

TEST_CASE("transpose swaps indices") {
  const LazyMatrix a = random_element(11, 8, Rational(1, 2));
  const LazyMatrix at = transpose(a);
  for (std::uint64_t i = 0; i < 8; ++i)
    for (std::uint64_t j = 0; j < 8; ++j)
      REQUIRE(at.entry(i, j) == a.entry(j, i));
  require_equal_on(transpose(at), a, 32);
}

TEST_CASE("multiplication by the identity and by the isometries") {
  const WitnessFamily family;
  const LazyMatrix a = random_element(3, 8, Rational(1, 2));
  require_equal_on(mul(identity_matrix(), a), a, 32);

  // w_n v_n = 1 while v_n w_n is only a projection.
  require_equal_on(mul(family.w(1), family.v(1)), identity_matrix(), 32);
  const LazyMatrix vw = mul(family.v(1), family.w(1));
  CHECK(vw.entry(4, 4) == 1);
  CHECK(vw.entry(0, 0) == 0);
}

TEST_CASE("linear combinations") {
  const WitnessFamily family;
  const LazyMatrix a = random_element(9, 8, Rational(1, 2));
  require_equal_on(linear_combine({{Rational(1), a}, {Rational(-1), a}}), zero_matrix(), 32);
  require_equal_on(
      linear_combine({{Rational(1), identity_matrix()}, {Rational(-1), family.p(0)}}),
      family.theta(1), 64);
  CHECK(linear_combine({{Rational(2), identity_matrix()}}).entry(3, 3) == 2);
}

TEST_CASE("transpose relates the two isometry constructions") {
  const WitnessFamily family;
  require_equal_on(transpose(family.v(1)), family.w(1), 32);
  CHECK(transpose(family.v(1)).entry(0, 1) == 1);
}

TEST_CASE("windowed equality") {
  const WitnessFamily family;
  CHECK(eq_window(identity_matrix(), identity_matrix(), 100).equal);
  require_equal_on(mul(family.theta(3), family.theta(3)), identity_matrix(), 256);

  const EqResult eq = eq_window(identity_matrix(), zero_matrix(), 4);
  REQUIRE_FALSE(eq.equal);
  CHECK(eq.i == 0);
  CHECK(eq.j == 0);
  CHECK(eq.lhs == 1);
  CHECK(eq.rhs == 0);
}

TEST_CASE("eq_window reports the lexicographically first mismatch") {
  const LazyMatrix a = from_triplets({{1, 3, Rational(2)}, {2, 0, Rational(5)}});
  const LazyMatrix b = from_triplets({{1, 5, Rational(7)}, {2, 0, Rational(5)}});
  const EqResult eq = eq_window(a, b, 8);
  REQUIRE_FALSE(eq.equal);
  CHECK(eq.i == 1);
  CHECK(eq.j == 3);
  CHECK(eq.lhs == 2);
  CHECK(eq.rhs == 0);
}

TEST_CASE("certificates of the witness matrices") {
  const WitnessFamily family;
  const CertificateReport v3 = certificate_check(family.v(3), 256, MatrixClass::C);
  CHECK(v3.pass);
  CHECK(family.v(3).certificate()->row_bound == 1);
  CHECK(family.v(3).certificate()->col_bound == 1);
  CHECK(*family.v(3).certificate()->entries ==
        std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(v3.observed_entries == std::vector<Rational>{Rational(0), Rational(1)});

  const CertificateReport id = certificate_check(identity_matrix(), 64, MatrixClass::C);
  CHECK(id.pass);
  CHECK(id.observed_row_bound == 1);
  CHECK(id.observed_col_bound == 1);
}

TEST_CASE("certificate violations are caught with a witness line") {
  // A full row of ones, declared with row bound 2.
  std::vector<std::tuple<std::uint64_t, std::uint64_t, Rational>> triplets;
  for (std::uint64_t j = 0; j < 16; ++j)
    triplets.emplace_back(0, j, Rational(1));
  const LazyMatrix wide = from_triplets(triplets).with_certificate(
      ClassCertificate{2, 2, std::vector<Rational>{Rational(0), Rational(1)}});
  const CertificateReport report = certificate_check(wide, 16, MatrixClass::C);
  REQUIRE_FALSE(report.pass);
  CHECK(report.violation.find("row 0") != std::string::npos);

  const LazyMatrix uncertified = wide.with_certificate(std::nullopt);
  CHECK_FALSE(certificate_check(uncertified, 16, MatrixClass::C).pass);
  CHECK(certificate_check(uncertified, 16, MatrixClass::D).pass);
}

TEST_CASE("seeded elements are deterministic and supported in the declared box") {
  const LazyMatrix a = random_element(42, 8, Rational(1, 2));
  const LazyMatrix b = random_element(42, 8, Rational(1, 2));
  CHECK(eq_window(a, b, 8).equal);
  CHECK(a.entry(100, 3) == 0);
  CHECK(certificate_check(a, 32, MatrixClass::D).pass);

  const LazyMatrix c = random_element(43, 8, Rational(1, 2));
  CHECK_FALSE(eq_window(a, c, 8).equal);

  CHECK_THROWS_AS(random_element(1, 0, Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(random_element(1, 4, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(random_element(1, 4, Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("ring laws on windows", "[property]") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const LazyMatrix a = random_element(seed, 8, Rational(1, 2));
    const LazyMatrix b = random_element(seed + 100, 8, Rational(1, 2));
    const LazyMatrix c = random_element(seed + 200, 8, Rational(1, 2));
    const Rational one(1);

    require_equal_on(linear_combine({{one, linear_combine({{one, a}, {one, b}})}, {one, c}}),
                     linear_combine({{one, a}, {one, linear_combine({{one, b}, {one, c}})}}),
                     64);
    require_equal_on(mul(a, mul(b, c)), mul(mul(a, b), c), 64);
    require_equal_on(mul(a, linear_combine({{one, b}, {one, c}})),
                     linear_combine({{one, mul(a, b)}, {one, mul(a, c)}}), 64);
    require_equal_on(transpose(mul(a, b)), mul(transpose(b), transpose(a)), 64);
  }
}

TEST_CASE("oracle support consistency", "[property]") {
  const WitnessFamily family;
  const LazyMatrix samples[] = {
      random_element(5, 8, Rational(1, 3)),
      mul(random_element(6, 8, Rational(1, 2)), random_element(7, 8, Rational(1, 2))),
      family.v(2),
      family.theta(2),
      banded_matrix({{0, Rational(1)}, {1, Rational(1, 2)}, {-2, Rational(-3)}}),
  };
  for (const LazyMatrix& m : samples) {
    for (std::uint64_t i = 0; i < 24; ++i)
      for (std::uint64_t j = 0; j < 24; ++j) {
        const bool nonzero = m.entry(i, j) != 0;
        CHECK(nonzero == (m.row(i).get(j) != 0));
        CHECK(nonzero == (m.col(j).get(i) != 0));
      }
  }
}

TEST_CASE("products inherit valid certificates", "[property]") {
  const WitnessFamily family;
  const LazyMatrix a = random_element(8, 8, Rational(1, 2));
  const LazyMatrix b = random_element(9, 8, Rational(1, 2));

  const LazyMatrix ab = mul(a, b);
  REQUIRE(ab.certificate().has_value());
  CHECK(certificate_check(ab, 32, MatrixClass::D).pass);

  const LazyMatrix vv = mul(family.v(1), family.w(1));
  REQUIRE(vv.certificate().has_value());
  CHECK(vv.certificate()->row_bound == 1);
  CHECK(*vv.certificate()->entries == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(certificate_check(vv, 64, MatrixClass::C).pass);

  const LazyMatrix sum = linear_combine({{Rational(1), a}, {Rational(-2), b}});
  CHECK(certificate_check(sum, 32, MatrixClass::D).pass);
}

TEST_CASE("banded matrices are infinite class-C elements") {
  const LazyMatrix band = banded_matrix({{0, Rational(1)}, {3, Rational(1, 2)}});
  CHECK(band.entry(1000, 1003) == Rational(1, 2));
  CHECK(band.entry(1000, 1000) == 1);
  CHECK(band.entry(1000, 1001) == 0);
  CHECK(certificate_check(band, 64, MatrixClass::C).pass);
  CHECK(band.certificate()->row_bound == 2);
}
