// The verification suite: every displayed identity of the construction,
// checked exactly on a finite window, with a deterministic per-identity
// report. Structural identities are checked for all indices up to the
// configured bound; element identities for every configured seed.

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lazycone/matrix.hpp"
#include "lazycone/two_by_two.hpp"
#include "lazycone/witnesses.hpp"

namespace lazycone {

struct VerifyConfig {
  std::uint64_t window = 256;
  std::uint64_t index_bound = 8;
  std::vector<std::uint64_t> seeds = {1,  2,  3,  4,  5,  6,  7,  8,  9,  10,
                                      11, 12, 13, 14, 15, 16, 17, 18, 19, 20};
  std::uint64_t support = 16;
  Rational density = Rational(1, 2);
};

// Offset pairing each seed s with a partner element seeded s + this, for
// the two-element identities (additivity, multiplicativity).
inline constexpr std::uint64_t kPartnerSeedOffset = 1'000'003;

struct Mismatch {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  Rational lhs;
  Rational rhs;
  std::string note;  // free-form context: failing index pair, slot, ...
};

struct IdentityRecord {
  std::string id;
  std::uint64_t window = 0;
  std::optional<std::uint64_t> seed;  // absent for structural identities
  std::string status;                 // "pass" | "fail" | "error"
  std::optional<Mismatch> mismatch;   // present iff status == "fail"
  std::string detail;                 // error text for status == "error"
};

struct VerificationReport {
  std::vector<IdentityRecord> records;

  bool all_pass() const {
    return std::all_of(records.begin(), records.end(),
                       [](const IdentityRecord& r) { return r.status == "pass"; });
  }
  std::size_t count(const std::string& status) const {
    return std::count_if(records.begin(), records.end(),
                         [&](const IdentityRecord& r) { return r.status == status; });
  }
};

namespace detail {

inline std::optional<Mismatch> eq_mismatch(const EqResult& eq, std::string note = {}) {
  if (eq.equal)
    return std::nullopt;
  return Mismatch{eq.i, eq.j, eq.lhs, eq.rhs, std::move(note)};
}

inline std::optional<Mismatch> eq2_mismatch(const EqResult2& eq, const std::string& note = {}) {
  if (eq.equal)
    return std::nullopt;
  std::string slot_note = "slot " + eq.slot;
  if (!note.empty())
    slot_note += ", " + note;
  return Mismatch{eq.inner.i, eq.inner.j, eq.inner.lhs, eq.inner.rhs, std::move(slot_note)};
}

class SuiteRunner {
 public:
  SuiteRunner(VerificationReport& report, std::uint64_t window) : report_(report), window_(window) {}

  // Runs one check; the callback returns nullopt on pass. Exceptions
  // become status "error" so one broken construction cannot hide the
  // rest of the suite.
  void run(std::string id, std::optional<std::uint64_t> seed,
           const std::function<std::optional<Mismatch>()>& check) {
    IdentityRecord record;
    record.id = std::move(id);
    record.window = window_;
    record.seed = seed;
    try {
      if (std::optional<Mismatch> bad = check()) {
        record.status = "fail";
        record.mismatch = std::move(bad);
      } else {
        record.status = "pass";
      }
    } catch (const std::exception& e) {
      record.status = "error";
      record.detail = e.what();
    }
    report_.records.push_back(std::move(record));
  }

 private:
  VerificationReport& report_;
  std::uint64_t window_;
};

}  // namespace detail

// Runs the full identity suite for the family, exact on [0, W)^2.
// Deterministic: identical (scheme, config) inputs give identical
// reports, records sorted by id then seed.
inline VerificationReport verify_identities(const WitnessFamily& family,
                                            const VerifyConfig& config) {
  VerificationReport report;
  detail::SuiteRunner suite(report, config.window);
  const std::uint64_t W = config.window;
  const std::uint64_t N = config.index_bound;
  const Rational one(1);

  // --- shift relations, for all block indices n, m <= N ------------------
  const auto for_indices =
      [N](const std::function<EqResult(std::uint64_t)>& check) -> std::optional<Mismatch> {
    for (std::uint64_t n = 0; n <= N; ++n)
      if (std::optional<Mismatch> bad = detail::eq_mismatch(check(n), "n=" + std::to_string(n)))
        return bad;
    return std::nullopt;
  };
  const auto for_index_pairs =
      [N](const std::function<EqResult(std::uint64_t, std::uint64_t)>& check)
      -> std::optional<Mismatch> {
    for (std::uint64_t n = 0; n <= N; ++n)
      for (std::uint64_t m = 0; m <= N; ++m) {
        if (m == n)
          continue;
        if (std::optional<Mismatch> bad = detail::eq_mismatch(
                check(n, m), "n=" + std::to_string(n) + " m=" + std::to_string(m)))
          return bad;
      }
    return std::nullopt;
  };

  suite.run("fact2/isometry", std::nullopt, [&] {
    return for_indices(
        [&](std::uint64_t n) { return eq_window(mul(family.w(n), family.v(n)), identity_matrix(), W); });
  });
  suite.run("fact2/range-projection", std::nullopt, [&] {
    return for_indices(
        [&](std::uint64_t n) { return eq_window(mul(family.v(n), family.w(n)), family.p(n), W); });
  });
  suite.run("fact2/idempotent", std::nullopt, [&] {
    return for_indices(
        [&](std::uint64_t n) { return eq_window(mul(family.p(n), family.p(n)), family.p(n), W); });
  });
  suite.run("fact2/w-absorbs-p", std::nullopt, [&] {
    return for_indices(
        [&](std::uint64_t n) { return eq_window(mul(family.w(n), family.p(n)), family.w(n), W); });
  });
  suite.run("fact2/p-absorbs-v", std::nullopt, [&] {
    return for_indices(
        [&](std::uint64_t n) { return eq_window(mul(family.p(n), family.v(n)), family.v(n), W); });
  });
  suite.run("fact2/orthogonal-projections", std::nullopt, [&] {
    return for_index_pairs([&](std::uint64_t n, std::uint64_t m) {
      return eq_window(mul(family.p(n), family.p(m)), zero_matrix(), W);
    });
  });
  suite.run("fact2/orthogonal-isometries", std::nullopt, [&] {
    return for_index_pairs([&](std::uint64_t n, std::uint64_t m) {
      return eq_window(mul(family.w(n), family.v(m)), zero_matrix(), W);
    });
  });

  // Pointwise partition of unity: each diagonal index belongs to exactly
  // one block projection among p_0..p_N (and to its own block).
  suite.run("fact2/partition-of-unity", std::nullopt, [&]() -> std::optional<Mismatch> {
    for (std::uint64_t m = 0; m < W; ++m) {
      const std::uint64_t home = family.scheme().locate(m).block;
      for (std::uint64_t k = 0; k <= N; ++k) {
        const Rational expected(k == home ? 1 : 0);
        const Rational got = family.p(k).entry(m, m);
        if (got != expected)
          return Mismatch{m, m, got, expected, "p_" + std::to_string(k)};
      }
    }
    return std::nullopt;
  });

  // Structural norm bound: at most one nonzero per line, and it is 1.
  suite.run("norm/one-per-line", std::nullopt, [&]() -> std::optional<Mismatch> {
    std::vector<std::pair<std::string, LazyMatrix>> subjects;
    for (std::uint64_t n = 0; n <= N; ++n) {
      subjects.emplace_back("v_" + std::to_string(n), family.v(n));
      subjects.emplace_back("w_" + std::to_string(n), family.w(n));
    }
    subjects.emplace_back("theta2", family.theta(2));
    subjects.emplace_back("theta3", family.theta(3));
    for (const auto& [name, m] : subjects) {
      for (std::uint64_t i = 0; i < W; ++i) {
        const SparseVec row = m.row(i);
        const SparseVec col = m.col(i);
        if (row.nonzeros_below(W) > 1 || col.nonzeros_below(W) > 1)
          return Mismatch{i, i, Rational(2), Rational(1), name + ": more than one nonzero"};
        for (const SparseVec* line : {&row, &col})
          for (const SparseEntry& e : *line) {
            if (e.index >= W)
              break;
            if (e.value != 1)
              return Mismatch{i, e.index, e.value, Rational(1), name};
          }
      }
    }
    return std::nullopt;
  });

  // --- involution relations ----------------------------------------------
  const LazyMatrix t1 = family.theta(1);
  const LazyMatrix t2 = family.theta(2);
  const LazyMatrix t3 = family.theta(3);

  suite.run("theta/complement-square", std::nullopt, [&] {
    return detail::eq_mismatch(eq_window(
        mul(t1, t1), linear_combine({{one, identity_matrix()}, {-one, family.p(0)}}), W));
  });
  suite.run("theta/fold-square", std::nullopt, [&] {
    return detail::eq_mismatch(eq_window(mul(t2, t2), identity_matrix(), W));
  });
  suite.run("theta/shift-square", std::nullopt, [&] {
    return detail::eq_mismatch(eq_window(mul(t3, t3), identity_matrix(), W));
  });
  suite.run("theta/w0-kills-complement", std::nullopt, [&] {
    return detail::eq_mismatch(eq_window(mul(family.w(0), t1), zero_matrix(), W));
  });
  suite.run("theta/complement-kills-v0", std::nullopt, [&] {
    return detail::eq_mismatch(eq_window(mul(t1, family.v(0)), zero_matrix(), W));
  });
  suite.run("theta/shift-swaps-blocks", std::nullopt, [&] {
    return for_indices([&](std::uint64_t i) {
      if (2 * i + 1 > N)
        return EqResult{};
      return eq_window(mul(family.p(2 * i), t3), mul(t3, family.p(2 * i + 1)), W);
    });
  });
  suite.run("theta/fold-fixes-corner", std::nullopt, [&]() -> std::optional<Mismatch> {
    if (std::optional<Mismatch> bad =
            detail::eq_mismatch(eq_window(mul(t2, family.p(0)), family.p(0), W), "theta2 p0"))
      return bad;
    return detail::eq_mismatch(eq_window(mul(family.p(0), t2), family.p(0), W), "p0 theta2");
  });

  // rho(1): the diagonal indicator of the odd blocks, not the identity.
  suite.run("rho/unit-indicator", std::nullopt, [&] {
    return detail::eq_mismatch(
        eq_window(family.rho(identity_matrix()), family.odd_block_indicator(), W));
  });

  // --- 2x2 involutions and the conjugator --------------------------------
  const TwoByTwo X = family.absorb_corner();
  const TwoByTwo Y = family.fold_to_even();
  const TwoByTwo Z = family.shift_to_odd();
  const TwoByTwo V = family.conjugator();
  const TwoByTwo Vinv = family.conjugator_inverse();

  suite.run("fact1/absorb-involution", std::nullopt,
            [&] { return detail::eq2_mismatch(eq2_window(mul2(X, X), identity2(), W)); });
  suite.run("fact1/fold-involution", std::nullopt,
            [&] { return detail::eq2_mismatch(eq2_window(mul2(Y, Y), identity2(), W)); });
  suite.run("fact1/shift-involution", std::nullopt,
            [&] { return detail::eq2_mismatch(eq2_window(mul2(Z, Z), identity2(), W)); });
  suite.run("fact1/conjugator-inverse", std::nullopt, [&]() -> std::optional<Mismatch> {
    if (std::optional<Mismatch> bad =
            detail::eq2_mismatch(eq2_window(mul2(V, Vinv), identity2(), W), "V Vinv"))
      return bad;
    return detail::eq2_mismatch(eq2_window(mul2(Vinv, V), identity2(), W), "Vinv V");
  });

  // --- certificates -------------------------------------------------------
  const auto class_c_with_bound = [W](const LazyMatrix& m, std::uint64_t bound,
                                      const std::string& name) -> std::optional<Mismatch> {
    const std::optional<ClassCertificate>& cert = m.certificate();
    if (!cert || cert->row_bound > bound || cert->col_bound > bound)
      return Mismatch{0, 0, Rational(0), Rational(0), name + ": declared bound exceeds " +
                                                          std::to_string(bound)};
    if (!cert->entries)
      return Mismatch{0, 0, Rational(0), Rational(0), name + ": entry set not declared"};
    for (const Rational& x : *cert->entries)
      if (x != 0 && x != 1)
        return Mismatch{0, 0, x, Rational(0), name + ": declared entry outside {0,1}"};
    const CertificateReport check = certificate_check(m, W, MatrixClass::C);
    if (!check.pass)
      return Mismatch{0, 0, Rational(0), Rational(0), name + ": " + check.violation};
    return std::nullopt;
  };

  suite.run("cert/isometries", std::nullopt, [&]() -> std::optional<Mismatch> {
    for (std::uint64_t n = 0; n <= N; ++n) {
      if (auto bad = class_c_with_bound(family.v(n), 1, "v_" + std::to_string(n)))
        return bad;
      if (auto bad = class_c_with_bound(family.w(n), 1, "w_" + std::to_string(n)))
        return bad;
    }
    return std::nullopt;
  });
  suite.run("cert/projections", std::nullopt, [&]() -> std::optional<Mismatch> {
    for (std::uint64_t n = 0; n <= N; ++n)
      if (auto bad = class_c_with_bound(family.p(n), 1, "p_" + std::to_string(n)))
        return bad;
    return std::nullopt;
  });
  suite.run("cert/involutions", std::nullopt, [&]() -> std::optional<Mismatch> {
    if (auto bad = class_c_with_bound(t1, 1, "theta1"))
      return bad;
    if (auto bad = class_c_with_bound(t2, 1, "theta2"))
      return bad;
    return class_c_with_bound(t3, 1, "theta3");
  });

  // --- seeded element identities ------------------------------------------
  for (const std::uint64_t seed : config.seeds) {
    const LazyMatrix a = random_element(seed, config.support, config.density);
    const LazyMatrix b =
        random_element(seed + kPartnerSeedOffset, config.support, config.density);

    suite.run("rho/additive", seed, [&] {
      return detail::eq_mismatch(
          eq_window(family.rho(linear_combine({{one, a}, {one, b}})),
                    linear_combine({{one, family.rho(a)}, {one, family.rho(b)}}), W));
    });
    suite.run("rho/multiplicative", seed, [&] {
      return detail::eq_mismatch(
          eq_window(family.rho(mul(a, b)), mul(family.rho(a), family.rho(b)), W));
    });
    suite.run("conj/complement-fixes-copies", seed, [&] {
      return detail::eq_mismatch(
          eq_window(mul(mul(t1, family.rho(a)), t1), family.rho(a), W));
    });
    suite.run("conj/fold-to-even", seed, [&] {
      const LazyMatrix inside =
          linear_combine({{one, family.corner_embed(a)}, {one, family.rho(a)}});
      return detail::eq_mismatch(
          eq_window(mul(mul(t2, inside), t2), family.even_transfer(a), W));
    });
    suite.run("conj/shift-to-odd", seed, [&] {
      return detail::eq_mismatch(
          eq_window(mul(mul(t3, family.even_transfer(a)), t3), family.rho(a), W));
    });
    suite.run("fact1/kills-first-slot", seed, [&] {
      const TwoByTwo conjugated = mul2(mul2(V, diag2(a, family.rho(a))), Vinv);
      return detail::eq2_mismatch(
          eq2_window(conjugated, diag2(zero_matrix(), family.rho(a)), W));
    });
    suite.run("cert/seeded-product", seed, [&]() -> std::optional<Mismatch> {
      const CertificateReport check = certificate_check(mul(a, b), W, MatrixClass::D);
      if (!check.pass)
        return Mismatch{0, 0, Rational(0), Rational(0), check.violation};
      return std::nullopt;
    });
  }

  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const IdentityRecord& x, const IdentityRecord& y) {
                     return std::tie(x.id, x.seed) < std::tie(y.id, y.seed);
                   });
  return report;
}

// Convenience overload over the default partition scheme.
inline VerificationReport verify_identities(std::uint64_t window,
                                            std::vector<std::uint64_t> seeds,
                                            std::uint64_t support) {
  VerifyConfig config;
  config.window = window;
  config.seeds = std::move(seeds);
  config.support = support;
  return verify_identities(WitnessFamily(), config);
}

}  // namespace lazycone
