// The witness family over a block partition of N: shift-style partial
// isometries between each block and the full index set, the block
// projections, the block-copy homomorphism rho, the three involutions
// that shuffle blocks, and the 2x2 conjugator assembled from them.
//
// Every matrix here is 0/1 with at most one nonzero per row and per
// column, so each product entry is a sum with at most one term.

#pragma once

#include <cstdint>
#include <utility>

#include "lazycone/matrix.hpp"
#include "lazycone/partition.hpp"
#include "lazycone/two_by_two.hpp"

namespace lazycone {

class WitnessFamily {
 public:
  explicit WitnessFamily(PartitionScheme scheme = diagonal_scheme())
      : scheme_(std::move(scheme)) {}

  const PartitionScheme& scheme() const { return scheme_; }

  // v_n maps slot j of the full index set to the j-th member of block n:
  // entry 1 at (position(n, j), j).
  LazyMatrix v(std::uint64_t n) const {
    const PartitionScheme s = scheme_;
    return LazyMatrix(
        [s, n](std::uint64_t i, std::uint64_t j) {
          return Rational(s.locate(i) == BlockSlot{n, j} ? 1 : 0);
        },
        [s, n](std::uint64_t i) {
          SparseVec row;
          const BlockSlot loc = s.locate(i);
          if (loc.block == n)
            row.entries.push_back({loc.slot, Rational(1)});
          return row;
        },
        [s, n](std::uint64_t j) {
          SparseVec col;
          col.entries.push_back({s.position(n, j), Rational(1)});
          return col;
        },
        zero_one_certificate());
  }

  // w_n collapses block n back onto the full index set; the transpose of
  // v_n, constructed directly.
  LazyMatrix w(std::uint64_t n) const {
    const PartitionScheme s = scheme_;
    return LazyMatrix(
        [s, n](std::uint64_t i, std::uint64_t j) {
          return Rational(s.locate(j) == BlockSlot{n, i} ? 1 : 0);
        },
        [s, n](std::uint64_t i) {
          SparseVec row;
          row.entries.push_back({s.position(n, i), Rational(1)});
          return row;
        },
        [s, n](std::uint64_t j) {
          SparseVec col;
          const BlockSlot loc = s.locate(j);
          if (loc.block == n)
            col.entries.push_back({loc.slot, Rational(1)});
          return col;
        },
        zero_one_certificate());
  }

  // p_n = v_n w_n, the diagonal indicator of block n.
  LazyMatrix p(std::uint64_t n) const {
    const PartitionScheme s = scheme_;
    return diagonal_indicator([s, n](std::uint64_t m) { return s.locate(m).block == n; });
  }

  LazyMatrix theta(int which) const {
    switch (which) {
      case 1:
        return complement_projection();
      case 2:
        return block_permutation([](std::uint64_t k) {
          if (k == 0)
            return k;
          return k % 2 == 1 ? k + 1 : k - 1;
        });
      case 3:
        return block_permutation(
            [](std::uint64_t k) { return k % 2 == 0 ? k + 1 : k - 1; });
      default:
        throw std::invalid_argument("theta index must be 1, 2 or 3");
    }
  }

  // rho places an identical copy of `a` in every odd block; the copies are
  // componentwise-finite sums, realized by direct locate/position lookup.
  LazyMatrix rho(const LazyMatrix& a) const {
    return block_copies(a, [](std::uint64_t k) { return k % 2 == 1; });
  }

  // Copy of `a` in every even block.
  LazyMatrix even_transfer(const LazyMatrix& a) const {
    return block_copies(a, [](std::uint64_t k) { return k % 2 == 0; });
  }

  // Copy of `a` in block 0 alone; equals v_0 a w_0.
  LazyMatrix corner_embed(const LazyMatrix& a) const {
    return block_copies(a, [](std::uint64_t k) { return k == 0; });
  }

  // rho(1): rho is not unital, its unit image is the diagonal indicator of
  // the union of the odd blocks.
  LazyMatrix odd_block_indicator() const {
    const PartitionScheme s = scheme_;
    return diagonal_indicator([s](std::uint64_t m) { return s.locate(m).block % 2 == 1; });
  }

  // The three 2x2 involutions whose product conjugates diag(a, rho(a))
  // to diag(0, rho(a)).
  //
  // Conjugating by absorb_corner() turns diag(a, rho(a)) into
  // diag(0, corner_embed(a) + rho(a)); fold_to_even() then moves the
  // copies onto the even blocks, and shift_to_odd() moves them back to
  // the odd blocks, leaving diag(0, rho(a)).
  TwoByTwo absorb_corner() const { return {zero_matrix(), w(0), v(0), theta(1)}; }
  TwoByTwo fold_to_even() const { return diag2(identity_matrix(), theta(2)); }
  TwoByTwo shift_to_odd() const { return diag2(identity_matrix(), theta(3)); }

  TwoByTwo conjugator() const {
    return mul2(shift_to_odd(), mul2(fold_to_even(), absorb_corner()));
  }
  TwoByTwo conjugator_inverse() const {
    return mul2(absorb_corner(), mul2(fold_to_even(), shift_to_odd()));
  }

 private:
  // 1 - p_0.
  LazyMatrix complement_projection() const {
    const PartitionScheme s = scheme_;
    return diagonal_indicator([s](std::uint64_t m) { return s.locate(m).block != 0; });
  }

  // Symmetric 0/1 permutation matrix sending slot j of block k to slot j
  // of block partner(k); partner must be an involution.
  template <typename PartnerFn>
  LazyMatrix block_permutation(PartnerFn partner) const {
    const PartitionScheme s = scheme_;
    auto line = [s, partner](std::uint64_t i) {
      const BlockSlot loc = s.locate(i);
      SparseVec out;
      out.entries.push_back({s.position(partner(loc.block), loc.slot), Rational(1)});
      return out;
    };
    return LazyMatrix(
        [s, partner](std::uint64_t i, std::uint64_t j) {
          const BlockSlot li = s.locate(i);
          const BlockSlot lj = s.locate(j);
          return Rational(li.slot == lj.slot && lj.block == partner(li.block) ? 1 : 0);
        },
        line, line, zero_one_certificate());
  }

  template <typename KeepFn>
  LazyMatrix block_copies(const LazyMatrix& a, KeepFn keep) const {
    const PartitionScheme s = scheme_;
    std::optional<ClassCertificate> cert = a.certificate();
    if (cert && cert->entries) {
      std::set<Rational> values(cert->entries->begin(), cert->entries->end());
      values.insert(Rational(0));
      cert->entries = detail::set_to_sorted(std::move(values));
    }
    return LazyMatrix(
        [s, keep, a](std::uint64_t r, std::uint64_t c) {
          const BlockSlot lr = s.locate(r);
          const BlockSlot lc = s.locate(c);
          if (lr.block != lc.block || !keep(lr.block))
            return Rational(0);
          return a.entry(lr.slot, lc.slot);
        },
        [s, keep, a](std::uint64_t r) {
          const BlockSlot lr = s.locate(r);
          SparseAccumulator acc;
          if (keep(lr.block))
            for (const SparseEntry& e : a.row(lr.slot))
              acc.add(s.position(lr.block, e.index), e.value);
          return acc.take();
        },
        [s, keep, a](std::uint64_t c) {
          const BlockSlot lc = s.locate(c);
          SparseAccumulator acc;
          if (keep(lc.block))
            for (const SparseEntry& e : a.col(lc.slot))
              acc.add(s.position(lc.block, e.index), e.value);
          return acc.take();
        },
        cert);
  }

  PartitionScheme scheme_;
};

}  // namespace lazycone
