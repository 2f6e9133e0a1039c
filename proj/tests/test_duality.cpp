#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hopfdual/theorem.hpp"

using namespace hopfdual;
using namespace fixtures;

namespace {

CrossedProductData trivial_c2() {
  BialgebraData h = cyclic_group_bialgebra(Z, 2);
  AlgebraData a = scalar_algebra(Z);
  return build_crossed_product({h, a, trivial_action(h, a)}, trivial_cocycle(h, a));
}

CrossedProductData sweedler_smash() {
  WeakActionData w = sweedler_module(Q);
  return build_crossed_product(w, trivial_cocycle(w.hopf, w.algebra));
}

void expect_passed(const ValidationReport& r) { EXPECT_TRUE(r.passed()) << r.first_failure(); }

}  // namespace

TEST(Lambda, GroupAlgebraOracle) {
  // lambda(h # d_y)(k) = [k = y] h k, i.e. E(y > hy)
  HopfData h = make_hopf(cyclic_group_bialgebra(Z, 2));
  SubalgebraU u = full_dual(h, Side::Right);
  LinearMap lam = lambda_map(h, u);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) EXPECT_EQ(lam.matrix().column(x * 2 + y), unit_vector(4, y * 2 + (x + y) % 2));
  EXPECT_EQ(lam(heisenberg(h, u).unit()), endomorphism_algebra(h.carrier()).unit());
  expect_passed(density_report(h, u));
}

TEST(Lambda, BothSidesBijectiveUpToRankFour) {
  for (const BialgebraData& b : {cyclic_group_bialgebra(Z, 2), cyclic_group_bialgebra(Z, 3),
                                 cyclic_group_bialgebra(Z, 4), sweedler_bialgebra(Q)}) {
    HopfData h = make_hopf(b);
    expect_passed(density_report(h, full_dual(h, Side::Right)));
    expect_passed(density_report(h, full_dual(h, Side::Left)));
  }
}

TEST(RL, Witnesses) {
  HopfData h = make_hopf(cyclic_group_bialgebra(Z, 2));
  SubalgebraU u = full_dual(h, Side::Right);
  auto ws = rl_check(h, u, {h.coalgebra().counit(), unit_vector(2, 1)});
  ASSERT_TRUE(ws[0].found() && ws[1].found());
  // rho(eps) = id = lambda(1 # eps); eps = d_e + d_g
  EXPECT_EQ(*ws[0].xi, vec({1, 1, 0, 0}));
  // k <- d_g = [k = g] g = lambda(e # d_g)(k)
  ASSERT_EQ(ws[1].pairs.size(), 1u);
  EXPECT_EQ(ws[1].pairs[0].h, 0u);
  EXPECT_EQ(ws[1].pairs[0].u, 1u);
  EXPECT_EQ(ws[1].pairs[0].coeff, Scalar(1));
}

TEST(RL, FailsForSmallU) {
  // U = span{eps} cannot express k <- d_g
  HopfData h = make_hopf(cyclic_group_bialgebra(Z, 2));
  SubalgebraU u = make_subalgebra(h, {vec({1, 1})}, Side::Right);
  auto ws = rl_check(h, u, {unit_vector(2, 1)});
  EXPECT_FALSE(ws[0].found());
}

TEST(Phi, GroupAlgebraOracle) {
  // phi1(c -> b)(h) = [h = c] b c, so phi1 E(c>b) = E(c>bc)
  HopfData h = make_hopf(cyclic_group_bialgebra(Z, 3));
  PhiMaps p = phi_maps(h, Side::Right);
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t b = 0; b < 3; ++b) EXPECT_EQ(p.phi1.matrix().column(c * 3 + b), unit_vector(9, c * 3 + (b + c) % 3));
  EXPECT_EQ(p.phi1(p.hat.unit()), p.ends.unit());
  expect_passed(phi_report(p));
}

TEST(Phi, SweedlerBothSides) {
  HopfData h = make_hopf(sweedler_bialgebra(Q));
  expect_passed(phi_report(phi_maps(h, Side::Right)));
  expect_passed(phi_report(phi_maps(h, Side::Left)));
}

TEST(Diagram, TrivialRanks) {
  CrossedProductData cp = trivial_c2();
  DualityDiagram d = build_diagram(cp, full_dual(*cp.hopf, Side::Right));
  EXPECT_EQ(d.smash.rank(), 4u);
  EXPECT_EQ(d.hat.rank(), 4u);
  EXPECT_EQ(d.ends.rank(), 4u);
  EXPECT_EQ(d.chi(d.target.unit()), d.ends.unit());
  expect_passed(d.checks);
}

TEST(Diagram, EpsilonOnProductRing) {
  CrossedProductData cp = swap_smash();
  for (Side s : {Side::Right, Side::Left}) {
    DualityDiagram d = build_diagram(cp, full_dual(*cp.hopf, s));
    EXPECT_EQ(compose(d.epsilon_inv, d.epsilon).matrix(), Matrix::identity(d.hat.rank()));
    EXPECT_EQ(compose(d.epsilon, d.alpha).matrix(), d.chi.matrix());
    expect_passed(d.checks);
  }
}

TEST(Diagram, PiOrderIsForcedByNoncommutativeInstances) {
  for (const CrossedProductData& cp : {swap_smash(), sweedler_smash()}) {
    SubalgebraU u = full_dual(*cp.hopf, Side::Right);
    DualityDiagram d = build_diagram(cp, u);
    EXPECT_EQ(d.order, PiOrder::ValueFirst);
    DualityDiagram other = build_diagram(cp, u, PiOrder::ValueLast);
    EXPECT_FALSE(other.checks.passed("right-pi-alpha"));
  }
}

TEST(Diagram, AllSmallInstancesBothSides) {
  for (const CrossedProductData& cp : {trivial_c2(), gauss(), swap_smash(), sweedler_smash()})
    for (Side s : {Side::Right, Side::Left}) expect_passed(build_diagram(cp, full_dual(*cp.hopf, s)).checks);
}

TEST(DualityIso, TrivialIsIdentityOnBasis) {
  // with A = Z and trivial data both gamma and chi send (1#h)#f to k -> h k f(k)
  CrossedProductData cp = trivial_c2();
  AlgebraIso iso = duality_iso(cp, full_dual(*cp.hopf, Side::Right));
  EXPECT_EQ(iso.map.matrix(), Matrix::identity(4));
}

TEST(DualityIso, OpSideSweedler) {
  CrossedProductData cp = sweedler_smash();
  AlgebraIso iso = duality_iso(cp, full_dual(*cp.hopf, Side::Left));
  EXPECT_EQ(iso.source.rank(), 32u);
  EXPECT_EQ(compose(iso.inverse, iso.map).matrix(), Matrix::identity(32));
}

TEST(MatrixIso, TrivialOracle) {
  // (1#h)#d_y -> e(h+y, y)
  MatrixIso m = matrix_iso(trivial_c2());
  ASSERT_EQ(m.legs.size(), 4u);
  EXPECT_EQ(m.total.target.rank(), 4u);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      EXPECT_EQ(m.total.map.matrix().column(x * 2 + y), unit_vector(4, ((x + y) % 2) * 2 + y));
}

TEST(MatrixIso, GaussianSwapAndC3) {
  EXPECT_EQ(matrix_iso(gauss()).total.target.rank(), 4u);
  EXPECT_EQ(matrix_iso(swap_smash()).total.target.rank(), 8u);
  BialgebraData c3 = cyclic_group_bialgebra(Z, 3);
  AlgebraData z = scalar_algebra(Z);
  CrossedProductData cp = build_crossed_product({c3, z, trivial_action(c3, z)}, trivial_cocycle(c3, z));
  EXPECT_EQ(matrix_iso(cp).total.target.rank(), 9u);
}

TEST(MatrixIso, NonSummandIsNotInvertible) {
  CrossedProductData cp = trivial_c2();
  SubalgebraU u = make_subalgebra(*cp.hopf, {vec({1, 1}), vec({1, -1})}, Side::Right);
  try {
    matrix_iso(cp, u);
    FAIL() << "expected NotInvertible";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
  }
}

TEST(Compat, TrivialCocycleReducesToAction) {
  // phi(h (x) a)(h~) = [Sbar(h~) a] eps(h), and eps = 1 on group elements
  CrossedProductData cp = swap_smash();
  CompatMaps m = compat_maps(cp, Side::Right);
  const HopfData& h = *cp.hopf;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k) {
        Vector want = cp.action.act(h.twisted_antipode_or_throw()(unit_vector(2, k)), unit_vector(2, i));
        const Vector col = m.phi.matrix().column(x * 2 + i);
        Vector got(col.begin() + static_cast<std::ptrdiff_t>(k * 2), col.begin() + static_cast<std::ptrdiff_t>(k * 2 + 2));
        EXPECT_EQ(got, want);
      }
}

TEST(Compat, FullDualIsCompatible) {
  for (const CrossedProductData& cp : {gauss(), sweedler_smash()})
    for (Side s : {Side::Right, Side::Left}) {
      SubalgebraU u = full_dual(*cp.hopf, s);
      expect_passed(compat_check(cp, u, u.elements));
    }
}

TEST(Compat, SmallVFailsForSwap) {
  CrossedProductData cp = swap_smash();
  ValidationReport r = compat_check(cp, full_dual(*cp.hopf, Side::Right), {vec({1, 1})});
  const CheckResult* c = r.find("compat-phi");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_FALSE(c->witness.empty());
}

TEST(Coaction, GroupAlgebrasAreTrivial) {
  for (std::size_t n : {2, 3, 4}) {
    HopfData h = make_hopf(cyclic_group_bialgebra(Z, n));
    for (CoactionKind k : {CoactionKind::Upsilon, CoactionKind::Omega}) {
      CoactionTable t = coaction_table(h, k);
      EXPECT_TRUE(t.trivial());
      expect_passed(coaction_report(t));
    }
  }
}

TEST(Coaction, SweedlerOverQAndZ3) {
  for (const Ring& r : {Q, Ring::integers_mod(3)}) {
    HopfData h = make_hopf(sweedler_bialgebra(r));
    for (CoactionKind k : {CoactionKind::Upsilon, CoactionKind::Omega}) {
      CoactionTable t = coaction_table(h, k);
      EXPECT_FALSE(t.trivial());
      expect_passed(coaction_report(t));
    }
  }
}

TEST(Coaction, PreimageOfFullDualIsEverything) {
  HopfData h = make_hopf(sweedler_bialgebra(Q));
  CoactionTable t = coaction_table(h, CoactionKind::Upsilon);
  EXPECT_EQ(coaction_preimage(t, full_dual(h, Side::Right)).size(), 4u);
}

TEST(FullRun, SuitePassesBothSides) {
  for (const CrossedProductData& cp : {trivial_c2(), gauss(), swap_smash(), sweedler_smash()})
    for (Side s : {Side::Right, Side::Left}) expect_passed(theorem_suite(cp, full_dual(*cp.hopf, s)));
}

TEST(FullRun, CleftRouteMatchesDirect) {
  CrossedProductData cp = gauss();
  SubalgebraU u = full_dual(*cp.hopf, Side::Right);
  CleftRoute route = cleft_route(cp, u, u.elements);
  expect_passed(route.hypotheses);
  EXPECT_EQ(route.iso.map.matrix(), duality_iso(cp, u).map.matrix());
}

TEST(FullRun, OppositeChainOnSmash) {
  CrossedProductData cp = swap_smash();
  SubalgebraU u = full_dual(*cp.hopf, Side::Right);
  OppositeChain chain = opposite_chain(cp, u);
  EXPECT_EQ(chain.legs.size(), 4u);
  expect_passed(chain.hypotheses);
  EXPECT_EQ(chain.total.map.matrix(), duality_iso(cp, u).map.matrix());
}

TEST(FullRun, SmallVReportsHypothesisFailure) {
  CrossedProductData cp = swap_smash();
  ValidationReport r = theorem_suite(cp, full_dual(*cp.hopf, Side::Right), std::vector<Vector>{vec({1, 1})});
  const CheckResult* c = r.find("theorem-hypotheses");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_NE(c->witness.find("HypothesisFailed"), std::string::npos);
}

TEST(SelfDuality, SweedlerIsIsomorphicToItsDual) {
  // g -> d_1 - d_g, x -> d_x - d_gx
  HopfData h = make_hopf(sweedler_bialgebra(Q));
  HopfData d = dual_hopf(h);
  Vector g = vec({1, -1, 0, 0}), x = vec({0, 0, 1, -1});
  LinearMap f(h.carrier(), d.carrier(), Matrix::from_columns(4, {d.algebra().unit(), g, x, d.algebra().multiply(g, x)}));
  EXPECT_FALSE(check_hopf_morphism(h, d, f).has_value());
  EXPECT_TRUE(Q.is_unit(determinant(Q, f.matrix())));
}
