// Lazy infinite matrices over exact rationals. A matrix is a triple of
// oracles (entry, row, column); rows and columns are finite sparse
// vectors, so products are finite sums in every component. Equality is
// decided exactly on finite windows.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lazycone/rational.hpp"
#include "lazycone/sparse_vec.hpp"

namespace lazycone {

enum class MatrixClass { C, D };

// Declared bounds for membership in the bounded-row/column algebra:
// at most row_bound nonzeros per row, col_bound per column, and (when
// explicit) entries drawn from a fixed finite set. `entries == nullopt`
// means the entry set is unknown.
struct ClassCertificate {
  std::uint64_t row_bound = 0;
  std::uint64_t col_bound = 0;
  std::optional<std::vector<Rational>> entries;  // sorted, unique
};

// Distinct-value cap past which combined entry sets degrade to unknown.
inline constexpr std::size_t kEntrySetCap = 4096;

namespace detail {

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0)
    return 0;
  return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

inline std::optional<std::vector<Rational>> set_to_sorted(std::set<Rational>&& s) {
  if (s.size() > kEntrySetCap)
    return std::nullopt;
  return std::vector<Rational>(s.begin(), s.end());
}

}  // namespace detail

class LazyMatrix {
 public:
  using EntryFn = std::function<Rational(std::uint64_t, std::uint64_t)>;
  using LineFn = std::function<SparseVec(std::uint64_t)>;

  LazyMatrix(EntryFn entry, LineFn row, LineFn col,
             std::optional<ClassCertificate> certificate = std::nullopt)
      : entry_(std::move(entry)),
        row_(std::move(row)),
        col_(std::move(col)),
        certificate_(std::move(certificate)) {}

  Rational entry(std::uint64_t i, std::uint64_t j) const { return entry_(i, j); }
  SparseVec row(std::uint64_t i) const { return row_(i); }
  SparseVec col(std::uint64_t j) const { return col_(j); }

  const std::optional<ClassCertificate>& certificate() const { return certificate_; }

  LazyMatrix with_certificate(std::optional<ClassCertificate> certificate) const {
    return LazyMatrix(entry_, row_, col_, std::move(certificate));
  }

 private:
  EntryFn entry_;
  LineFn row_;
  LineFn col_;
  std::optional<ClassCertificate> certificate_;
};

inline ClassCertificate zero_one_certificate() {
  return {1, 1, std::vector<Rational>{Rational(0), Rational(1)}};
}

// Diagonal 0/1 matrix selecting the indices where `member` holds.
inline LazyMatrix diagonal_indicator(std::function<bool(std::uint64_t)> member) {
  auto line = [member](std::uint64_t i) {
    SparseVec v;
    if (member(i))
      v.entries.push_back({i, Rational(1)});
    return v;
  };
  return LazyMatrix(
      [member](std::uint64_t i, std::uint64_t j) {
        return Rational(i == j && member(i) ? 1 : 0);
      },
      line, line, zero_one_certificate());
}

inline LazyMatrix identity_matrix() {
  return diagonal_indicator([](std::uint64_t) { return true; });
}

inline LazyMatrix zero_matrix() {
  auto line = [](std::uint64_t) { return SparseVec{}; };
  return LazyMatrix([](std::uint64_t, std::uint64_t) { return Rational(0); }, line, line,
                    ClassCertificate{0, 0, std::vector<Rational>{Rational(0)}});
}

// Materialized matrix from (i, j, value) triplets; duplicate positions are
// summed and zeros dropped. The certificate records the observed bounds
// and value set.
inline LazyMatrix from_triplets(
    const std::vector<std::tuple<std::uint64_t, std::uint64_t, Rational>>& triplets) {
  struct Storage {
    std::map<std::uint64_t, SparseVec> rows;
    std::map<std::uint64_t, SparseVec> cols;
  };
  std::map<std::uint64_t, std::map<std::uint64_t, Rational>> grid;
  for (const auto& [i, j, value] : triplets)
    grid[i][j] += value;

  auto storage = std::make_shared<Storage>();
  std::set<Rational> values{Rational(0)};
  std::map<std::uint64_t, SparseAccumulator> col_acc;
  for (auto& [i, cells] : grid) {
    SparseVec row;
    for (auto& [j, value] : cells) {
      if (value == 0)
        continue;
      row.entries.push_back({j, value});
      col_acc[j].add(i, value);
      values.insert(value);
    }
    if (!row.empty())
      storage->rows.emplace(i, std::move(row));
  }
  std::uint64_t row_bound = 0, col_bound = 0;
  for (const auto& [i, row] : storage->rows)
    row_bound = std::max<std::uint64_t>(row_bound, row.size());
  for (auto& [j, acc] : col_acc) {
    SparseVec col = acc.take();
    col_bound = std::max<std::uint64_t>(col_bound, col.size());
    storage->cols.emplace(j, std::move(col));
  }

  ClassCertificate cert{row_bound, col_bound,
                        detail::set_to_sorted(std::move(values))};
  auto fetch = [](const std::map<std::uint64_t, SparseVec>& lines, std::uint64_t key) {
    const auto it = lines.find(key);
    return it == lines.end() ? SparseVec{} : it->second;
  };
  return LazyMatrix(
      [storage, fetch](std::uint64_t i, std::uint64_t j) {
        return fetch(storage->rows, i).get(j);
      },
      [storage, fetch](std::uint64_t i) { return fetch(storage->rows, i); },
      [storage, fetch](std::uint64_t j) { return fetch(storage->cols, j); }, cert);
}

// Genuinely infinite test matrix: constant values along the listed
// diagonals (offset = column - row). Finitely many distinct entries and
// at most one nonzero per row per band.
inline LazyMatrix banded_matrix(const std::vector<std::pair<std::int64_t, Rational>>& bands) {
  auto merged = std::make_shared<std::map<std::int64_t, Rational>>();
  for (const auto& [offset, value] : bands)
    (*merged)[offset] += value;
  std::erase_if(*merged, [](const auto& band) { return band.second == 0; });

  std::set<Rational> values{Rational(0)};
  for (const auto& [offset, value] : *merged)
    values.insert(value);
  ClassCertificate cert{merged->size(), merged->size(),
                        detail::set_to_sorted(std::move(values))};

  return LazyMatrix(
      [merged](std::uint64_t i, std::uint64_t j) {
        const std::int64_t offset =
            static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i);
        const auto it = merged->find(offset);
        return it == merged->end() ? Rational(0) : it->second;
      },
      [merged](std::uint64_t i) {
        SparseVec row;
        for (const auto& [offset, value] : *merged) {
          if (offset < 0 && i < static_cast<std::uint64_t>(-offset))
            continue;
          row.entries.push_back({i + offset, value});
        }
        return row;
      },
      [merged](std::uint64_t j) {
        SparseVec col;
        for (auto it = merged->rbegin(); it != merged->rend(); ++it) {
          const auto& [offset, value] = *it;
          if (offset > 0 && j < static_cast<std::uint64_t>(offset))
            continue;
          col.entries.push_back({j - offset, value});
        }
        return col;
      },
      cert);
}

namespace detail {

inline std::optional<ClassCertificate> product_certificate(
    const std::optional<ClassCertificate>& a, const std::optional<ClassCertificate>& b) {
  if (!a || !b)
    return std::nullopt;
  ClassCertificate cert{sat_mul(a->row_bound, b->row_bound),
                        sat_mul(a->col_bound, b->col_bound), std::nullopt};
  if (a->entries && b->entries) {
    // An entry of the product is a sum of at most min(row_bound(A),
    // col_bound(B)) pairwise products; close the set under that many
    // additions. The cap bounds both the set size and the closure work
    // (set operations spent), degrading to unknown once either is
    // exceeded: a slowly converging closure below the size cap would
    // otherwise cost |S| * |P| exact operations per round.
    std::size_t ops = 0;
    bool overflowed = false;
    const auto spent = [&ops] { return ++ops > kEntrySetCap; };
    std::set<Rational> products;
    for (const Rational& x : *a->entries) {
      for (const Rational& y : *b->entries) {
        products.insert(x * y);
        if (products.size() > kEntrySetCap || spent()) {
          overflowed = true;
          break;
        }
      }
      if (overflowed)
        break;
    }
    const std::uint64_t max_terms = std::min(a->row_bound, b->col_bound);
    std::set<Rational> sums{Rational(0)};
    for (std::uint64_t t = 0; t < max_terms && !overflowed; ++t) {
      std::set<Rational> next = sums;
      for (const Rational& s : sums) {
        for (const Rational& p : products) {
          next.insert(s + p);
          if (next.size() > kEntrySetCap || spent()) {
            overflowed = true;
            break;
          }
        }
        if (overflowed)
          break;
      }
      if (next == sums)
        break;
      sums = std::move(next);
    }
    if (!overflowed)
      cert.entries = std::vector<Rational>(sums.begin(), sums.end());
  }
  return cert;
}

}  // namespace detail

// Lazy product; entry (i, j) is the finite sum over the row support of A.
inline LazyMatrix mul(const LazyMatrix& a, const LazyMatrix& b) {
  return LazyMatrix(
      [a, b](std::uint64_t i, std::uint64_t j) {
        Rational sum(0);
        for (const SparseEntry& e : a.row(i))
          sum += e.value * b.entry(e.index, j);
        return sum;
      },
      [a, b](std::uint64_t i) {
        SparseAccumulator acc;
        for (const SparseEntry& e : a.row(i))
          acc.add_scaled(e.value, b.row(e.index));
        return acc.take();
      },
      [a, b](std::uint64_t j) {
        SparseAccumulator acc;
        for (const SparseEntry& e : b.col(j))
          acc.add_scaled(e.value, a.col(e.index));
        return acc.take();
      },
      detail::product_certificate(a.certificate(), b.certificate()));
}

// Entrywise sum of scaled matrices.
inline LazyMatrix linear_combine(std::vector<std::pair<Rational, LazyMatrix>> terms) {
  auto shared = std::make_shared<std::vector<std::pair<Rational, LazyMatrix>>>(std::move(terms));

  std::optional<ClassCertificate> cert = ClassCertificate{
      0, 0, std::vector<Rational>{Rational(0)}};
  for (const auto& [coeff, matrix] : *shared) {
    if (!matrix.certificate()) {
      cert.reset();
      break;
    }
    const ClassCertificate& mc = *matrix.certificate();
    cert->row_bound = detail::sat_add(cert->row_bound, mc.row_bound);
    cert->col_bound = detail::sat_add(cert->col_bound, mc.col_bound);
    if (cert->entries && mc.entries) {
      // Same cap discipline as the product closure: bound the work, not
      // just the result, before degrading to an unknown entry set.
      std::size_t ops = 0;
      bool overflowed = false;
      std::set<Rational> sums;
      for (const Rational& s : *cert->entries) {
        for (const Rational& x : *mc.entries) {
          sums.insert(s + coeff * x);
          if (sums.size() > kEntrySetCap || ++ops > kEntrySetCap) {
            overflowed = true;
            break;
          }
        }
        if (overflowed)
          break;
      }
      if (overflowed)
        cert->entries.reset();
      else
        cert->entries = detail::set_to_sorted(std::move(sums));
    } else {
      cert->entries.reset();
    }
  }

  return LazyMatrix(
      [shared](std::uint64_t i, std::uint64_t j) {
        Rational sum(0);
        for (const auto& [coeff, matrix] : *shared)
          sum += coeff * matrix.entry(i, j);
        return sum;
      },
      [shared](std::uint64_t i) {
        SparseAccumulator acc;
        for (const auto& [coeff, matrix] : *shared)
          acc.add_scaled(coeff, matrix.row(i));
        return acc.take();
      },
      [shared](std::uint64_t j) {
        SparseAccumulator acc;
        for (const auto& [coeff, matrix] : *shared)
          acc.add_scaled(coeff, matrix.col(j));
        return acc.take();
      },
      cert);
}

inline LazyMatrix transpose(const LazyMatrix& a) {
  std::optional<ClassCertificate> cert = a.certificate();
  if (cert)
    std::swap(cert->row_bound, cert->col_bound);
  return LazyMatrix(
      [a](std::uint64_t i, std::uint64_t j) { return a.entry(j, i); },
      [a](std::uint64_t i) { return a.col(i); }, [a](std::uint64_t j) { return a.row(j); },
      cert);
}

// Outcome of an exact window comparison; on failure carries the
// lexicographically first offending pair.
struct EqResult {
  bool equal = true;
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  Rational lhs;
  Rational rhs;
};

inline std::string describe(const EqResult& eq) {
  if (eq.equal)
    return "equal";
  return "mismatch at (" + std::to_string(eq.i) + "," + std::to_string(eq.j) + "): " +
         rational_str(eq.lhs) + " != " + rational_str(eq.rhs);
}

// Compares all entries with 0 <= i, j < window, exactly.
inline EqResult eq_window(const LazyMatrix& a, const LazyMatrix& b, std::uint64_t window) {
  for (std::uint64_t i = 0; i < window; ++i) {
    const SparseVec ra = a.row(i);
    const SparseVec rb = b.row(i);
    auto ita = ra.begin();
    auto itb = rb.begin();
    while (true) {
      const std::uint64_t ja = ita == ra.end() ? window : std::min(ita->index, window);
      const std::uint64_t jb = itb == rb.end() ? window : std::min(itb->index, window);
      if (ja >= window && jb >= window)
        break;
      if (ja < jb)
        return {false, i, ja, ita->value, Rational(0)};
      if (jb < ja)
        return {false, i, jb, Rational(0), itb->value};
      if (ita->value != itb->value)
        return {false, i, ja, ita->value, itb->value};
      ++ita;
      ++itb;
    }
  }
  return {};
}

struct CertificateReport {
  bool pass = true;
  std::string violation;  // empty when passing
  std::uint64_t observed_row_bound = 0;
  std::uint64_t observed_col_bound = 0;
  std::vector<Rational> observed_entries;  // distinct values on the window
};

// Window check of a matrix against its declared class. Class C requires a
// certificate (bounds, and entry membership when the set is explicit);
// class D checks only that the three oracles tell one consistent story.
inline CertificateReport certificate_check(const LazyMatrix& a, std::uint64_t window,
                                           MatrixClass cls) {
  CertificateReport report;
  const auto fail = [&](std::string why) {
    if (report.pass) {
      report.pass = false;
      report.violation = std::move(why);
    }
  };

  const std::optional<ClassCertificate>& cert = a.certificate();
  if (cls == MatrixClass::C && !cert) {
    fail("class C requires a declared certificate");
    return report;
  }

  std::set<Rational> seen;
  bool any_zero = false;
  for (std::uint64_t i = 0; i < window && report.pass; ++i) {
    const SparseVec row = a.row(i);
    if (!row.is_canonical())
      fail("row " + std::to_string(i) + " support is not canonical");
    const std::uint64_t nnz = row.nonzeros_below(window);
    report.observed_row_bound = std::max(report.observed_row_bound, nnz);
    if (nnz < window)
      any_zero = true;
    if (cls == MatrixClass::C && nnz > cert->row_bound)
      fail("row " + std::to_string(i) + " has " + std::to_string(nnz) +
           " nonzeros, declared bound " + std::to_string(cert->row_bound));
    for (const SparseEntry& e : row) {
      if (e.index >= window)
        break;
      seen.insert(e.value);
      if (cls == MatrixClass::C && cert->entries &&
          !std::binary_search(cert->entries->begin(), cert->entries->end(), e.value))
        fail("entry (" + std::to_string(i) + "," + std::to_string(e.index) + ") = " +
             rational_str(e.value) + " outside the declared entry set");
      if (a.col(e.index).get(i) != e.value)
        fail("row/column oracles disagree at (" + std::to_string(i) + "," +
             std::to_string(e.index) + ")");
    }
    // The entry oracle must agree with the row support everywhere,
    // including the zeros.
    for (std::uint64_t j = 0; j < window && report.pass; ++j)
      if (a.entry(i, j) != row.get(j))
        fail("entry/row oracles disagree at (" + std::to_string(i) + "," + std::to_string(j) +
             ")");
  }
  for (std::uint64_t j = 0; j < window && report.pass; ++j) {
    const SparseVec col = a.col(j);
    if (!col.is_canonical())
      fail("column " + std::to_string(j) + " support is not canonical");
    const std::uint64_t nnz = col.nonzeros_below(window);
    report.observed_col_bound = std::max(report.observed_col_bound, nnz);
    if (cls == MatrixClass::C && nnz > cert->col_bound)
      fail("column " + std::to_string(j) + " has " + std::to_string(nnz) +
           " nonzeros, declared bound " + std::to_string(cert->col_bound));
    for (const SparseEntry& e : col) {
      if (e.index >= window)
        break;
      if (a.entry(e.index, j) != e.value)
        fail("entry/column oracles disagree at (" + std::to_string(e.index) + "," +
             std::to_string(j) + ")");
    }
  }
  if (any_zero)
    seen.insert(Rational(0));
  report.observed_entries.assign(seen.begin(), seen.end());
  return report;
}

// Deterministic seeded test element supported in [0, support)^2 with
// small rational entries. Identical seeds give identical matrices.
inline LazyMatrix random_element(std::uint64_t seed, std::uint64_t support,
                                 const Rational& density) {
  if (support < 1)
    throw std::invalid_argument("random_element: support must be at least 1");
  if (density <= 0 || density > 1)
    throw std::invalid_argument("random_element: density must lie in (0,1]");
  const BigInt num_big = boost::multiprecision::numerator(density);
  const BigInt den_big = boost::multiprecision::denominator(density);
  if (den_big > 1'000'000'000)
    throw std::invalid_argument("random_element: density denominator too large");
  const std::uint64_t num = num_big.convert_to<std::uint64_t>();
  const std::uint64_t den = den_big.convert_to<std::uint64_t>();

  static constexpr int kNumerators[] = {-3, -2, -1, 1, 2, 3};
  std::mt19937_64 gen(seed);
  std::vector<std::tuple<std::uint64_t, std::uint64_t, Rational>> triplets;
  for (std::uint64_t i = 0; i < support; ++i)
    for (std::uint64_t j = 0; j < support; ++j) {
      if (gen() % den >= num)
        continue;
      const int p = kNumerators[gen() % 6];
      const int q = static_cast<int>(gen() % 3) + 1;
      triplets.emplace_back(i, j, Rational(p, q));
    }
  return from_triplets(triplets);
}

}  // namespace lazycone
