// Partition of the index set N into infinitely many infinite blocks,
// each block enumerated by a slot index. The default scheme is the
// diagonal (Cantor) pairing; alternative schemes plug in through
// PartitionScheme as long as position and locate are mutually inverse.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lazycone {

struct BlockSlot {
  std::uint64_t block = 0;
  std::uint64_t slot = 0;
  friend bool operator==(const BlockSlot&, const BlockSlot&) = default;
};

// A bijection (block, slot) <-> N given by a pair of closures.
struct PartitionScheme {
  std::string name;
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> position_fn;
  std::function<BlockSlot(std::uint64_t)> locate_fn;

  std::uint64_t position(std::uint64_t block, std::uint64_t slot) const {
    return position_fn(block, slot);
  }
  BlockSlot locate(std::uint64_t index) const { return locate_fn(index); }
};

namespace detail {

using u128 = unsigned __int128;

inline std::uint64_t isqrt_u128(u128 x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && static_cast<u128>(r) * r > x)
    --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= x)
    ++r;
  return r;
}

// Largest t with t(t+1)/2 still representable in 64 bits.
inline constexpr std::uint64_t kMaxDiagonal = 6074000999ULL;

}  // namespace detail

// position(k, n) = (k+n)(k+n+1)/2 + n, the diagonal pairing. Inputs whose
// image does not fit in 64 bits are rejected, never wrapped.
inline PartitionScheme diagonal_scheme() {
  PartitionScheme scheme;
  scheme.name = "diagonal";
  scheme.position_fn = [](std::uint64_t block, std::uint64_t slot) -> std::uint64_t {
    const detail::u128 diag = static_cast<detail::u128>(block) + slot;
    if (diag > detail::kMaxDiagonal)
      throw std::overflow_error("partition position overflows 64 bits");
    const detail::u128 value = diag * (diag + 1) / 2 + slot;
    if (value > UINT64_MAX)
      throw std::overflow_error("partition position overflows 64 bits");
    return static_cast<std::uint64_t>(value);
  };
  scheme.locate_fn = [](std::uint64_t index) -> BlockSlot {
    const detail::u128 x = static_cast<detail::u128>(index) * 8 + 1;
    const std::uint64_t diag = (detail::isqrt_u128(x) - 1) / 2;
    const std::uint64_t slot =
        index - static_cast<std::uint64_t>(static_cast<detail::u128>(diag) * (diag + 1) / 2);
    return {diag - slot, slot};
  };
  return scheme;
}

// Same pairing with the roles of block and slot swapped; still a bijection
// with position strictly increasing in the slot. Used to re-run the
// invariant suite against a second conforming scheme.
inline PartitionScheme transposed_diagonal_scheme() {
  PartitionScheme diag = diagonal_scheme();
  PartitionScheme scheme;
  scheme.name = "transposed-diagonal";
  scheme.position_fn = [base = diag.position_fn](std::uint64_t block, std::uint64_t slot) {
    return base(slot, block);
  };
  scheme.locate_fn = [base = diag.locate_fn](std::uint64_t index) {
    const BlockSlot loc = base(index);
    return BlockSlot{loc.slot, loc.block};
  };
  return scheme;
}

// Reassigns a single index to a foreign block, leaving position untouched.
// The result is no longer a partition scheme: the enumeration of the
// original block still claims the index while membership says otherwise.
// This is the smallest violation and is what --mutate-partition injects.
inline PartitionScheme with_index_relocated(const PartitionScheme& base, std::uint64_t index,
                                            BlockSlot target) {
  PartitionScheme scheme;
  scheme.name = base.name + "+relocated";
  scheme.position_fn = base.position_fn;
  scheme.locate_fn = [inner = base.locate_fn, index, target](std::uint64_t m) {
    return m == index ? target : inner(m);
  };
  return scheme;
}

inline PartitionScheme mutated_diagonal_scheme() {
  return with_index_relocated(diagonal_scheme(), 2, BlockSlot{1, 1});
}

// { m < window : locate(m).block == block }, increasing. A plain scan, so
// it works for plug-in schemes that are bijective but not monotone.
inline std::vector<std::uint64_t> members_below(const PartitionScheme& scheme,
                                                std::uint64_t block, std::uint64_t window) {
  std::vector<std::uint64_t> members;
  for (std::uint64_t m = 0; m < window; ++m)
    if (scheme.locate(m).block == block)
      members.push_back(m);
  return members;
}

}  // namespace lazycone
