#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hopfdual/crossed.hpp"

using namespace hopfdual;
using namespace fixtures;

TEST(Cocycle, TrivialIsNormalCocycle) {
  BialgebraData h = cyclic_group_bialgebra(Z, 2);
  AlgebraData a = scalar_algebra(Z);
  CocycleData c = validate_cocycle({h, a, trivial_action(h, a)}, trivial_cocycle(h, a));
  EXPECT_TRUE(c.normal && c.cocycle && c.twisted_module);
  ASSERT_TRUE(c.sigma_inv.has_value());
  EXPECT_EQ(*c.sigma_inv, c.sigma);
}

TEST(Cocycle, SignCocycle) {
  BialgebraData h = cyclic_group_bialgebra(Z, 2);
  AlgebraData a = scalar_algebra(Z);
  CocycleData c = validate_cocycle({h, a, trivial_action(h, a)}, group_cocycle(h, a, {{1, 1, -1}}));
  EXPECT_TRUE(c.normal && c.cocycle && c.twisted_module);
  ASSERT_TRUE(c.sigma_inv.has_value());
  EXPECT_EQ(c.sigma_inv->matrix()(0, 3), Scalar(-1));
}

TEST(Cocycle, NonInvertibleKeepsFlags) {
  BialgebraData h = cyclic_group_bialgebra(Z, 2);
  AlgebraData a = scalar_algebra(Z);
  CocycleData c = validate_cocycle({h, a, trivial_action(h, a)}, group_cocycle(h, a, {{1, 1, 2}}));
  EXPECT_TRUE(c.normal && c.cocycle && c.twisted_module);
  EXPECT_FALSE(c.sigma_inv.has_value());
  EXPECT_THROW(c.inverse_or_throw(), Error);
}

TEST(CrossedProduct, GaussianIntegers) {
  CrossedProductData cp = gauss();
  // (1#g)^2 = -(1#e)
  EXPECT_EQ(cp.product.multiply(unit_vector(2, 1), unit_vector(2, 1)), vec({-1, 0}));
  EXPECT_TRUE(validate_crossed_product(cp).passed()) << validate_crossed_product(cp).first_failure();
}

TEST(CrossedProduct, TrivialDataIsTensorProduct) {
  BialgebraData h = cyclic_group_bialgebra(Z, 3);
  AlgebraData a = idempotent_algebra(Z, 2);
  CrossedProductData cp = build_crossed_product({h, a, trivial_action(h, a)}, trivial_cocycle(h, a));
  EXPECT_EQ(cp.product, tensor_algebra(a, h.algebra()));
}

TEST(CrossedProduct, SwapSmashIsNoncommutative) {
  CrossedProductData cp = swap_smash();
  EXPECT_TRUE(validate_crossed_product(cp).passed()) << validate_crossed_product(cp).first_failure();
  EXPECT_FALSE(opposite(cp.product) == cp.product);
}

TEST(CrossedProduct, SweedlerModuleAlgebra) {
  WeakActionData w = sweedler_module(Q);
  EXPECT_TRUE(validate_weak_action(w).passed()) << validate_weak_action(w).first_failure();
  EXPECT_FALSE(check_module_action(w).has_value());
  CrossedProductData cp = build_crossed_product(w, trivial_cocycle(w.hopf, w.algebra));
  EXPECT_TRUE(validate_crossed_product(cp).passed()) << validate_crossed_product(cp).first_failure();
}

TEST(Associativity, Biconditional) {
  BialgebraData c2 = cyclic_group_bialgebra(Z, 2);
  AlgebraData z = scalar_algebra(Z);
  BialgebraData c3 = cyclic_group_bialgebra(Q, 3);
  AlgebraData q = scalar_algebra(Q);
  AlgebraData q3 = idempotent_algebra(Q, 3);
  BialgebraData c2q = cyclic_group_bialgebra(Q, 2);

  // not normal only: sigma = 2 eps (x) eps
  Matrix twice(1, 4);
  for (std::size_t i = 0; i < 4; ++i) twice(0, i) = 2;
  CrossedProductCheck non_normal = crossed_product_check(
      {c2, z, trivial_action(c2, z)}, LinearMap(tensor(c2.carrier(), c2.carrier()), z.carrier(), twice));
  EXPECT_FALSE(non_normal.cocycle.normal);
  EXPECT_TRUE(non_normal.cocycle.cocycle && non_normal.cocycle.twisted_module);
  EXPECT_FALSE(non_normal.unital);
  EXPECT_TRUE(non_normal.agrees());

  // not a cocycle only
  CrossedProductCheck bad_cocycle =
      crossed_product_check({c3, q, trivial_action(c3, q)}, group_cocycle(c3, q, {{1, 1, 2}}));
  EXPECT_TRUE(bad_cocycle.cocycle.normal && bad_cocycle.cocycle.twisted_module);
  EXPECT_FALSE(bad_cocycle.cocycle.cocycle);
  EXPECT_FALSE(bad_cocycle.associative);
  EXPECT_TRUE(bad_cocycle.agrees());

  // twisted module condition only: C2 acting by a 3-cycle
  WeakActionData cyc{c2q, q3, cyclic_shift_action(c2q, q3)};
  EXPECT_TRUE(validate_weak_action(cyc).passed());
  CrossedProductCheck bad_twist = crossed_product_check(cyc, trivial_cocycle(c2q, q3));
  EXPECT_TRUE(bad_twist.cocycle.normal && bad_twist.cocycle.cocycle);
  EXPECT_FALSE(bad_twist.cocycle.twisted_module);
  EXPECT_FALSE(bad_twist.associative);
  EXPECT_TRUE(bad_twist.agrees());
  EXPECT_THROW(build_crossed_product(cyc, trivial_cocycle(c2q, q3)), Error);
}

TEST(Cleft, TrivialIntegral) {
  BialgebraData h = cyclic_group_bialgebra(Z, 2);
  AlgebraData a = scalar_algebra(Z);
  CrossedProductData cp = build_crossed_product({h, a, trivial_action(h, a)}, trivial_cocycle(h, a));
  CleftData cl = integral_from_crossed(cp);
  EXPECT_EQ(cl.theta_inv.matrix().column(1), vec({0, 1}));
  EXPECT_TRUE(validate_cleft(cl).passed());
}

TEST(Cleft, GaussianRoundTrip) {
  CrossedProductData cp = gauss();
  CleftData cl = integral_from_crossed(cp);
  EXPECT_EQ(cl.theta_inv.matrix().column(1), vec({0, -1}));
  EXPECT_TRUE(validate_cleft(cl).passed()) << validate_cleft(cl).first_failure();
  EXPECT_EQ(cl.theta_inv, convolution_invert(cl.hopf.coalgebra(), cp.product, cl.theta));
  CleftDecomposition d = crossed_from_integral(cl);
  EXPECT_EQ(d.crossed.cocycle.sigma.matrix(), cp.cocycle.sigma.matrix());
  EXPECT_EQ(d.crossed.action.action.matrix(), cp.action.action.matrix());
  EXPECT_EQ(d.iso.map.matrix(), Matrix::identity(2));
}

TEST(Cleft, SwapAndSweedlerRoundTrips) {
  for (const CrossedProductData& cp :
       {swap_smash(), build_crossed_product(sweedler_module(Q), trivial_cocycle(sweedler_bialgebra(Q),
                                                                               sweedler_module(Q).algebra))}) {
    CleftData cl = integral_from_crossed(cp);
    EXPECT_TRUE(validate_cleft(cl).passed()) << validate_cleft(cl).first_failure();
    EXPECT_EQ(cl.theta_inv, convolution_invert(cl.hopf.coalgebra(), cp.product, cl.theta));
    CleftDecomposition d = crossed_from_integral(cl);
    EXPECT_EQ(d.crossed.cocycle.sigma.matrix(), cp.cocycle.sigma.matrix());
    EXPECT_EQ(d.crossed.action.action.matrix(), cp.action.action.matrix());
  }
}

TEST(OppositeCrossed, Gaussian) {
  OppositeCrossed op = opposite_crossed(gauss());
  EXPECT_EQ(op.crossed.cocycle.sigma.matrix()(0, 3), Scalar(-1));
  EXPECT_TRUE(op.crossed.cocycle.sigma_inv.has_value());
}

TEST(OppositeCrossed, TrivialIsIdentity) {
  BialgebraData h = cyclic_group_bialgebra(Z, 2);
  AlgebraData a = idempotent_algebra(Z, 2);
  CrossedProductData cp = build_crossed_product({h, a, trivial_action(h, a)}, trivial_cocycle(h, a));
  OppositeCrossed op = opposite_crossed(cp);
  EXPECT_EQ(op.crossed.cocycle.sigma, cp.cocycle.sigma);
  EXPECT_EQ(op.iso.map.matrix(), Matrix::identity(4));
}

TEST(OppositeCrossed, SweedlerSmash) {
  WeakActionData w = sweedler_module(Q);
  CrossedProductData cp = build_crossed_product(w, trivial_cocycle(w.hopf, w.algebra));
  OppositeCrossed op = opposite_crossed(cp);
  EXPECT_EQ(op.iso.map.domain().rank(), 8u);
  EXPECT_TRUE(validate_crossed_product(op.crossed).passed());
}

TEST(CleftMaps, GaussianValues) {
  CrossedProductData cp = gauss();
  CleftData cl = integral_from_crossed(cp);
  CoinvariantAlgebra co = coinvariant_algebra(cl.comodule);
  CleftMaps m = cleft_maps(cl, co);
  // domain (g, 1) is index 1, codomain [g -> 1] is index 1; both values are
  // i * i * theta^-1(e) = -1 and (-i)(-i) = -1
  EXPECT_EQ(m.phi.matrix()(1, 1), Scalar(-1));
  EXPECT_EQ(m.psi.matrix()(1, 1), Scalar(-1));
  // at k = 1: sum a theta(h1) theta^-1(h2) = eps(h) a
  EXPECT_EQ(m.phi.matrix()(0, 1), Scalar(1));
}

TEST(CleftMaps, TrivialCollapse) {
  BialgebraData h = cyclic_group_bialgebra(Z, 3);
  AlgebraData a = idempotent_algebra(Z, 2);
  CrossedProductData cp = build_crossed_product({h, a, trivial_action(h, a)}, trivial_cocycle(h, a));
  CleftData cl = integral_from_crossed(cp);
  CleftMaps m = cleft_maps(cl, coinvariant_algebra(cl.comodule));
  // phi(h (x) a)(k) = eps(h) eps(k) a, with eps = 1 on group elements
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t j = 0; j < 2; ++j)
          EXPECT_EQ(m.phi.matrix()(k * 2 + j, x * 2 + i), Scalar(i == j ? 1 : 0));
}
