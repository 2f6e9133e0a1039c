#pragma once

// Small instances shared by the unit tests. Builders come from the
// catalog header; the instances here are assembled independently of it.

#include <tuple>
#include <vector>

#include "hopfdual/catalog.hpp"

namespace fixtures {

using namespace hopfdual;

inline const Ring Z = Ring::integers();
inline const Ring Q = Ring::rationals();

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline CrossedProductData gauss() {
  BialgebraData h = cyclic_group_bialgebra(Z, 2);
  AlgebraData a = scalar_algebra(Z);
  return build_crossed_product({h, a, trivial_action(h, a)}, group_cocycle(h, a, {{1, 1, -1}}));
}

inline CrossedProductData swap_smash() {
  BialgebraData h = cyclic_group_bialgebra(Z, 2);
  AlgebraData a = idempotent_algebra(Z, 2);
  WeakActionData w{h, a, cyclic_shift_action(h, a)};
  return build_crossed_product(w, trivial_cocycle(h, a));
}

}  // namespace fixtures
