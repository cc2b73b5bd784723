// Sparse row/column vectors: strictly increasing indices, no stored zeros.

#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "lazycone/rational.hpp"

namespace lazycone {

struct SparseEntry {
  std::uint64_t index = 0;
  Rational value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

struct SparseVec {
  std::vector<SparseEntry> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
  auto begin() const { return entries.begin(); }
  auto end() const { return entries.end(); }

  Rational get(std::uint64_t index) const {
    const auto it = std::lower_bound(
        entries.begin(), entries.end(), index,
        [](const SparseEntry& e, std::uint64_t idx) { return e.index < idx; });
    if (it != entries.end() && it->index == index)
      return it->value;
    return Rational(0);
  }

  std::uint64_t nonzeros_below(std::uint64_t bound) const {
    std::uint64_t count = 0;
    for (const SparseEntry& e : entries) {
      if (e.index >= bound)
        break;
      ++count;
    }
    return count;
  }

  bool is_canonical() const {
    for (std::size_t t = 0; t < entries.size(); ++t) {
      if (entries[t].value == 0)
        return false;
      if (t > 0 && entries[t - 1].index >= entries[t].index)
        return false;
    }
    return true;
  }
};

// Collects (index, value) contributions in any order and canonicalizes:
// sorts, merges duplicate indices, drops exact zeros.
class SparseAccumulator {
 public:
  void add(std::uint64_t index, const Rational& value) {
    if (value != 0)
      items_.push_back({index, value});
  }

  void add_scaled(const Rational& coeff, const SparseVec& vec) {
    if (coeff == 0)
      return;
    for (const SparseEntry& e : vec)
      items_.push_back({e.index, coeff * e.value});
  }

  SparseVec take() {
    std::sort(items_.begin(), items_.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    SparseVec out;
    for (SparseEntry& item : items_) {
      if (!out.entries.empty() && out.entries.back().index == item.index)
        out.entries.back().value += item.value;
      else
        out.entries.push_back(std::move(item));
    }
    std::erase_if(out.entries, [](const SparseEntry& e) { return e.value == 0; });
    items_.clear();
    return out;
  }

 private:
  std::vector<SparseEntry> items_;
};

}  // namespace lazycone
