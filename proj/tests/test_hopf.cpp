#include <gtest/gtest.h>

#include <set>

#include "hopfdual/algebra.hpp"
#include "hopfdual/hopf.hpp"

using namespace hopfdual;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// The antipode of a cyclic group algebra by the closed form g^i -> g^(n-i).
Matrix group_inverse_matrix(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m((n - i) % n, i) = 1;
  return m;
}

}  // namespace

TEST(Algebra, MatrixUnits) {
  AlgebraData m2 = matrix_algebra(Z, 2);
  EXPECT_TRUE(validate_algebra(m2).passed());
  // e11 e12 = e12, e12 e11 = 0 (indices 0 and 1)
  EXPECT_EQ(m2.multiply(m2.basis(0), m2.basis(1)), m2.basis(1));
  EXPECT_TRUE(is_zero(m2.multiply(m2.basis(1), m2.basis(0))));
}

TEST(Algebra, OppositeIsInvolutive) {
  BialgebraData h4 = sweedler_bialgebra(Q);
  EXPECT_EQ(opposite(opposite(h4.algebra())), h4.algebra());
  BialgebraData c2 = cyclic_group_bialgebra(Z, 2);
  EXPECT_EQ(opposite(c2.algebra()), c2.algebra());
  EXPECT_FALSE(opposite(h4.algebra()) == h4.algebra());
  EXPECT_TRUE(validate_bialgebra(opposite(h4)).passed());
  EXPECT_TRUE(validate_bialgebra(co_opposite(h4)).passed());
}

TEST(Algebra, TensorProducts) {
  BialgebraData c2 = cyclic_group_bialgebra(Z, 2);
  AlgebraData t = tensor_algebra(c2.algebra(), matrix_algebra(Z, 2));
  EXPECT_TRUE(validate_algebra(t).passed());
  CoalgebraData tc = tensor_coalgebra(c2.coalgebra(), sweedler_bialgebra(Z).coalgebra());
  EXPECT_TRUE(validate_coalgebra(tc).passed());
}

TEST(Sweedler, LeftNestedExpansion) {
  BialgebraData h4 = sweedler_bialgebra(Q);
  // Delta^2(x) = x1 1 + g x 1 + g g x
  auto terms = sweedler(h4.coalgebra(), 2, 3);
  ASSERT_EQ(terms.size(), 3u);
  std::set<std::vector<std::size_t>> legs;
  for (const auto& t : terms) {
    legs.insert(t.legs);
    EXPECT_EQ(t.coeff, 1);
  }
  EXPECT_TRUE(legs.count({2, 0, 0}));
  EXPECT_TRUE(legs.count({1, 2, 0}));
  EXPECT_TRUE(legs.count({1, 1, 2}));
}

TEST(Hopf, GroupAlgebraValidates) {
  HopfData h = make_hopf(cyclic_group_bialgebra(Z, 2));
  EXPECT_TRUE(validate_hopf(h).passed()) << validate_hopf(h).first_failure();
}

TEST(Hopf, WrongAntipodeFailsWithWitness) {
  BialgebraData b = cyclic_group_bialgebra(Z, 2);
  Matrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 1;  // S(g) = e
  HopfData h(b, LinearMap(b.carrier(), b.carrier(), s));
  ValidationReport r = validate_hopf(h);
  ASSERT_NE(r.find("antipode"), nullptr);
  EXPECT_FALSE(r.find("antipode")->passed);
  EXPECT_EQ(r.find("antipode")->witness, "g");
}

TEST(Hopf, SweedlerValidates) {
  HopfData h = make_hopf(sweedler_bialgebra(Q));
  EXPECT_TRUE(validate_hopf(h).passed()) << validate_hopf(h).first_failure();
  // S(x) = -gx
  EXPECT_EQ(h.antipode().matrix().column(2), vec({0, 0, 0, -1}));
  Matrix s2 = multiply(Q, h.antipode().matrix(), h.antipode().matrix());
  EXPECT_NE(s2, Matrix::identity(4));
  EXPECT_EQ(multiply(Q, s2, s2), Matrix::identity(4));
  ASSERT_TRUE(h.twisted_antipode().has_value());
  EXPECT_EQ(h.twisted_antipode()->matrix(), invert(Q, h.antipode().matrix()));
  EXPECT_EQ(h.twisted_antipode()->matrix(), multiply(Q, s2, h.antipode().matrix()));
}

TEST(Hopf, SweedlerOverZ) {
  HopfData h = make_hopf(sweedler_bialgebra(Z));
  EXPECT_TRUE(validate_hopf(h).passed());
}

TEST(Hopf, CyclicAntipodeClosedForm) {
  for (std::size_t n : {2u, 3u, 4u}) {
    BialgebraData b = cyclic_group_bialgebra(Z, n);
    EXPECT_EQ(compute_antipode(b).matrix(), group_inverse_matrix(n));
    EXPECT_EQ(compute_twisted_antipode(b).matrix(), group_inverse_matrix(n));
  }
}

TEST(Convolution, UnitIsItsOwnInverse) {
  BialgebraData b = cyclic_group_bialgebra(Z, 3);
  LinearMap u = convolution_unit(b.coalgebra(), b.algebra());
  EXPECT_EQ(convolution_invert(b.coalgebra(), b.algebra(), u), u);
}

TEST(Convolution, NonInvertibleCocycleOverZ) {
  BialgebraData b = cyclic_group_bialgebra(Z, 2);
  CoalgebraData hh = tensor_coalgebra(b.coalgebra(), b.coalgebra());
  AlgebraData r = scalar_algebra(Z);
  Matrix s(1, 4);
  s(0, 0) = s(0, 1) = s(0, 2) = 1;
  s(0, 3) = 2;
  try {
    convolution_invert(hh, r, LinearMap(hh.carrier(), r.carrier(), s));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotConvInvertible);
  }
  // the same map is invertible over Q
  BialgebraData bq = cyclic_group_bialgebra(Q, 2);
  CoalgebraData hq = tensor_coalgebra(bq.coalgebra(), bq.coalgebra());
  AlgebraData rq = scalar_algebra(Q);
  LinearMap inv = convolution_invert(hq, rq, LinearMap(hq.carrier(), rq.carrier(), s));
  EXPECT_EQ(inv.matrix()(0, 3), Scalar(1, 2));
}

TEST(Convolution, TruncatedMonoidIsNotHopf) {
  // R[t]/(t^2) with t grouplike-free: Delta(t) = t (x) t is the monoid {1, t}
  // with t t = t; id has no convolution inverse
  FreeModule m(Z, {"1", "t"});
  AlgebraData alg = AlgebraData::from_products(
      m, [](std::size_t i, std::size_t j) { return unit_vector(2, (i || j) ? 1 : 0); },
      unit_vector(2, 0));
  CoalgebraData co = CoalgebraData::from_coproducts(
      m, [](std::size_t i) { return unit_vector(4, i * 2 + i); }, vec({1, 1}));
  BialgebraData b(alg, co);
  ASSERT_TRUE(validate_bialgebra(b).passed());
  EXPECT_THROW(compute_antipode(b), Error);
}

TEST(Dual, GroupAlgebraDual) {
  HopfData h = make_hopf(cyclic_group_bialgebra(Z, 2));
  HopfData d = dual_hopf(h);
  EXPECT_TRUE(validate_hopf(d).passed());
  // pointwise product, Delta(d_e) = d_e d_e + d_g d_g
  EXPECT_EQ(d.algebra().multiply(d.algebra().basis(1), d.algebra().basis(1)), vec({0, 1}));
  EXPECT_TRUE(is_zero(d.algebra().multiply(d.algebra().basis(0), d.algebra().basis(1))));
  EXPECT_EQ(d.coalgebra().comult().matrix().column(0), vec({1, 0, 0, 1}));
  HopfData dd = dual_hopf(d);
  EXPECT_EQ(dd.algebra().mult().matrix(), h.algebra().mult().matrix());
  EXPECT_EQ(dd.coalgebra().comult().matrix(), h.coalgebra().comult().matrix());
  EXPECT_EQ(dd.antipode().matrix(), h.antipode().matrix());
}

TEST(Dual, SweedlerDualValidates) {
  HopfData h = make_hopf(sweedler_bialgebra(Q));
  HopfData d = dual_hopf(h);
  EXPECT_TRUE(validate_hopf(d).passed()) << validate_hopf(d).first_failure();
  EXPECT_EQ(d.antipode().matrix(), compute_antipode(d.bialgebra()).matrix());
}
