#include <gtest/gtest.h>

#include "hopfdual/actions.hpp"

using namespace hopfdual;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Z x Z with idempotent basis p0 = (1,0), p1 = (0,1)
AlgebraData product_ring(const Ring& r) {
  FreeModule m(r, {"p0", "p1"});
  return AlgebraData::from_products(
      m, [](std::size_t i, std::size_t j) { return i == j ? unit_vector(2, i) : Vector(2); },
      vec({1, 1}));
}

// g acts on Z x Z through the 2x2 matrix `g`
LinearMap c2_action(const BialgebraData& h, const AlgebraData& a, const Matrix& g) {
  Matrix m(2, 4);
  m(0, 0) = m(1, 1) = 1;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i, 2 + j) = g(i, j);
  return LinearMap(tensor(h.carrier(), a.carrier()), a.carrier(), m);
}

}  // namespace

TEST(Pairing, HitActionsOnGroupAlgebra) {
  HopfData h = make_hopf(cyclic_group_bialgebra(Z, 2));
  HopfData d = dual_hopf(h);
  PairingData p = dual_pairing(h, d);
  EXPECT_TRUE(validate_pairing(p).passed());
  Vector dg = unit_vector(2, 1), g = unit_vector(2, 1), e = unit_vector(2, 0);
  EXPECT_EQ(hit_left(p, dg, g), g);
  EXPECT_TRUE(is_zero(hit_left(p, dg, e)));
  EXPECT_EQ(hit_left(p, d.algebra().unit(), g), g);
  EXPECT_EQ(hit_right(p, e, d.algebra().unit()), e);
}

TEST(Pairing, SweedlerBimodule) {
  HopfData h = make_hopf(sweedler_bialgebra(Q));
  PairingData p = dual_pairing(h, dual_hopf(h));
  EXPECT_TRUE(validate_pairing(p).passed()) << validate_pairing(p).first_failure();
}

TEST(Regular, GroupAlgebra) {
  HopfData h = make_hopf(cyclic_group_bialgebra(Z, 2));
  HopfData d = dual_hopf(h);
  RegularActions ra = regular_actions(h, d.carrier());
  // (d_e g)(k) = d_e(gk) is nonzero only at k = g
  EXPECT_EQ(ra.right(tensor(unit_vector(2, 0), unit_vector(2, 1))), unit_vector(2, 1));
  EXPECT_EQ(ra.left(tensor(h.algebra().unit(), unit_vector(2, 1))), unit_vector(2, 1));
  EXPECT_TRUE(validate_regular_actions(h, ra).passed());
}

TEST(Regular, SweedlerBimodule) {
  HopfData h = make_hopf(sweedler_bialgebra(Q));
  RegularActions ra = regular_actions(h, dual_hopf(h).carrier());
  EXPECT_TRUE(validate_regular_actions(h, ra).passed());
}

TEST(WeakAction, TrivialAndSwap) {
  BialgebraData h = cyclic_group_bialgebra(Z, 2);
  AlgebraData a = product_ring(Z);
  EXPECT_TRUE(validate_weak_action({h, a, trivial_action(h, a)}).passed());
  Matrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = 1;
  WeakActionData w{h, a, c2_action(h, a, swap)};
  EXPECT_TRUE(validate_weak_action(w).passed());
  EXPECT_FALSE(check_module_action(w).has_value());
}

TEST(WeakAction, SignFlipFails) {
  BialgebraData h = cyclic_group_bialgebra(Z, 2);
  AlgebraData a = product_ring(Z);
  Matrix flip(2, 2);
  flip(0, 0) = 1;
  flip(1, 1) = -1;
  ValidationReport r = validate_weak_action({h, a, c2_action(h, a, flip)});
  const CheckResult* c = r.find("weak-action-measuring");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_NE(c->witness.find("g"), std::string::npos);
}

TEST(Coinvariants, RegularCoaction) {
  BialgebraData h = cyclic_group_bialgebra(Z, 2);
  ComoduleAlgebraData c{h, h.algebra(), h.coalgebra().comult()};
  EXPECT_TRUE(validate_comodule_algebra(c).passed());
  Coinvariants co = coinvariants(c);
  ASSERT_EQ(co.basis.size(), 1u);
  EXPECT_EQ(co.basis[0], h.algebra().unit());
  EXPECT_TRUE(co.free_summand);
  EXPECT_FALSE(check_coinvariant_subalgebra(c, co).has_value());
}

TEST(Coinvariants, TrivialCoactionGivesEverything) {
  BialgebraData h = cyclic_group_bialgebra(Z, 2);
  AlgebraData a = product_ring(Z);
  Matrix one(2, 1);
  one(0, 0) = 1;
  ComoduleAlgebraData c{h, a, LinearMap(a.carrier(), tensor(a.carrier(), h.carrier()),
                                        kron(Z, Matrix::identity(2), one))};
  EXPECT_TRUE(validate_comodule_algebra(c).passed());
  Coinvariants co = coinvariants(c);
  EXPECT_EQ(co.basis.size(), 2u);
  EXPECT_TRUE(co.free_summand);
}
