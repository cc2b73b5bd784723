// 2x2 block matrices whose entries are lazy infinite matrices.

#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "lazycone/matrix.hpp"

namespace lazycone {

struct TwoByTwo {
  LazyMatrix a11 = zero_matrix();
  LazyMatrix a12 = zero_matrix();
  LazyMatrix a21 = zero_matrix();
  LazyMatrix a22 = zero_matrix();
};

inline TwoByTwo diag2(LazyMatrix top, LazyMatrix bottom) {
  return {std::move(top), zero_matrix(), zero_matrix(), std::move(bottom)};
}

inline TwoByTwo identity2() {
  return diag2(identity_matrix(), identity_matrix());
}

inline TwoByTwo mul2(const TwoByTwo& m, const TwoByTwo& n) {
  const Rational one(1);
  return {
      linear_combine({{one, mul(m.a11, n.a11)}, {one, mul(m.a12, n.a21)}}),
      linear_combine({{one, mul(m.a11, n.a12)}, {one, mul(m.a12, n.a22)}}),
      linear_combine({{one, mul(m.a21, n.a11)}, {one, mul(m.a22, n.a21)}}),
      linear_combine({{one, mul(m.a21, n.a12)}, {one, mul(m.a22, n.a22)}}),
  };
}

struct EqResult2 {
  bool equal = true;
  std::string slot;  // "11", "12", "21", "22" of the first failing block
  EqResult inner;
};

inline EqResult2 eq2_window(const TwoByTwo& m, const TwoByTwo& n, std::uint64_t window) {
  const std::pair<const LazyMatrix TwoByTwo::*, const char*> slots[] = {
      {&TwoByTwo::a11, "11"},
      {&TwoByTwo::a12, "12"},
      {&TwoByTwo::a21, "21"},
      {&TwoByTwo::a22, "22"},
  };
  for (const auto& [member, name] : slots) {
    const EqResult eq = eq_window(m.*member, n.*member, window);
    if (!eq.equal)
      return {false, name, eq};
  }
  return {};
}

}  // namespace lazycone
