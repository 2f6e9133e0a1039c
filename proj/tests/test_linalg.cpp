#include <gtest/gtest.h>

#include <random>

#include "hopfdual/linalg.hpp"
#include "hopfdual/solve.hpp"

using namespace hopfdual;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size(), c = rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (auto row : rows) {
    std::size_t j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(Ring, CanonicalElements) {
  Ring z6 = Ring::integers_mod(6);
  EXPECT_EQ(z6.normalize(Scalar(-1)), Scalar(5));
  EXPECT_EQ(z6.inverse(Scalar(5)), Scalar(5));
  EXPECT_FALSE(z6.is_unit(Scalar(3)));
  EXPECT_THROW(Ring::integers_mod(1), Error);
}

TEST(Ring, StrictParsing) {
  Ring q = Ring::rationals();
  EXPECT_THROW(q.parse_element("2/4"), Error);
  EXPECT_EQ(q.parse_element("-3/7"), Scalar(-3, 7));
  Ring z5 = Ring::integers_mod(5);
  EXPECT_THROW(z5.parse_element("7"), Error);
  EXPECT_THROW(Ring::integers().parse_element("1/2"), Error);
  EXPECT_EQ(Ring::parse("Z/6"), Ring::integers_mod(6));
  EXPECT_THROW(Ring::parse("F7"), Error);
}

TEST(Solve, DiagonalOverZ) {
  SolveResult r = solve_linear(Ring::integers(), mat({{2, 0}, {0, 3}}), vec({4, 3}));
  ASSERT_EQ(r.status, SolveResult::Status::Unique);
  EXPECT_EQ(*r.particular, vec({2, 1}));
}

TEST(Solve, NoSolutionOverZ) {
  SolveResult r = solve_linear(Ring::integers(), mat({{2}}), vec({1}));
  EXPECT_EQ(r.status, SolveResult::Status::NoSolution);
  EXPECT_FALSE(r.particular.has_value());
}

TEST(Solve, CompositeModulus) {
  SolveResult r = solve_linear(Ring::integers_mod(6), mat({{2}}), vec({4}));
  ASSERT_EQ(r.status, SolveResult::Status::Parametric);
  EXPECT_EQ(*r.particular, vec({2}));
  ASSERT_EQ(r.kernel_basis.size(), 1u);
  EXPECT_EQ(r.kernel_basis[0], vec({3}));
}

TEST(Solve, RationalParametric) {
  Ring q = Ring::rationals();
  SolveResult r = solve_linear(q, mat({{1, 2, 3}, {2, 4, 6}}), vec({3, 6}));
  ASSERT_EQ(r.status, SolveResult::Status::Parametric);
  EXPECT_EQ(apply(q, mat({{1, 2, 3}}), *r.particular), vec({3}));
  EXPECT_EQ(r.kernel_basis.size(), 2u);
  EXPECT_EQ(solve_linear(q, mat({{1, 1}, {1, 1}}), vec({1, 2})).status,
            SolveResult::Status::NoSolution);
}

TEST(Solve, DimensionMismatch) {
  try {
    solve_linear(Ring::integers(), mat({{1, 2}}), vec({1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Solve, KernelVectorsAnnihilate) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<long> d(-4, 4);
  for (Ring ring : {Ring::integers(), Ring::rationals(), Ring::integers_mod(12)}) {
    for (int trial = 0; trial < 40; ++trial) {
      Matrix m(3, 4);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = ring.normalize(Scalar(d(gen)));
      Vector x(4);
      for (auto& v : x) v = ring.normalize(Scalar(d(gen)));
      Vector b = apply(ring, m, x);
      SolveResult r = solve_linear(ring, m, b);
      ASSERT_TRUE(r.solvable());
      EXPECT_EQ(apply(ring, m, *r.particular), b);
      for (const auto& k : r.kernel_basis) EXPECT_TRUE(is_zero(apply(ring, m, k)));
    }
  }
}

TEST(Kron, Examples) {
  Ring z = Ring::integers();
  EXPECT_EQ(kron(z, Matrix::identity(2), Matrix::identity(3)), Matrix::identity(6));
  EXPECT_EQ(kron(z, mat({{0, 1}, {1, 0}}), mat({{2}})), mat({{0, 2}, {2, 0}}));
  Matrix f = mat({{1, 2}, {3, 4}});
  EXPECT_EQ(kron(z, f, Matrix::identity(1)), f);
}

TEST(Kron, MixedProduct) {
  Ring z = Ring::integers();
  Matrix f = mat({{1, 2}, {0, 1}}), f2 = mat({{3, 0}, {1, 1}});
  Matrix g = mat({{0, 1, 1}, {2, 0, 1}}), g2 = mat({{1, 0}, {0, 1}, {5, -1}});
  EXPECT_EQ(kron(z, multiply(z, f, f2), multiply(z, g, g2)),
            multiply(z, kron(z, f, g), kron(z, f2, g2)));
  Matrix h = mat({{1, -1}});
  EXPECT_EQ(kron(z, kron(z, f, g), h), kron(z, f, kron(z, g, h)));
}

TEST(Twist, Permutations) {
  Ring z = Ring::integers();
  FreeModule m1 = FreeModule::indexed(z, 1), m2 = FreeModule::indexed(z, 2, "a"),
             m3 = FreeModule::indexed(z, 3, "c");
  FreeModule k4 = FreeModule::indexed(z, 4, "k");
  EXPECT_EQ(twist(m1, k4).matrix(), Matrix::identity(4));
  EXPECT_EQ(twist(m2, m2).matrix(), mat({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(compose(twist(m3, m2), twist(m2, m3)).matrix(), Matrix::identity(6));
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(Ring::integers(), mat({{1, 1}, {0, 1}})), mat({{1, -1}, {0, 1}}));
  try {
    invert(Ring::integers(), mat({{2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
  }
  EXPECT_EQ(invert(Ring::integers_mod(5), mat({{2}})), mat({{3}}));
  EXPECT_THROW(invert(Ring::integers(), mat({{1, 2}})), Error);
}

TEST(Invert, TwoSided) {
  std::mt19937 gen(11);
  std::uniform_int_distribution<long> d(-3, 3);
  for (Ring ring : {Ring::rationals(), Ring::integers_mod(9), Ring::integers()}) {
    int done = 0;
    while (done < 15) {
      Matrix m(3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = ring.normalize(Scalar(d(gen)));
      if (!ring.is_unit(determinant(ring, m))) continue;
      Matrix inv = invert(ring, m);
      EXPECT_EQ(multiply(ring, inv, m), Matrix::identity(3));
      EXPECT_EQ(multiply(ring, m, inv), Matrix::identity(3));
      ++done;
    }
  }
}

TEST(Determinant, Values) {
  EXPECT_EQ(determinant(Ring::integers(), mat({{2, 1}, {7, 4}})), Scalar(1));
  EXPECT_EQ(determinant(Ring::integers(), mat({{0, 1}, {1, 0}})), Scalar(-1));
  Matrix q(2, 2);
  q(0, 0) = Scalar(1, 2);
  q(1, 1) = Scalar(2, 3);
  q(0, 1) = 5;
  EXPECT_EQ(determinant(Ring::rationals(), q), Scalar(1, 3));
  EXPECT_EQ(determinant(Ring::integers_mod(6), mat({{5, 0}, {0, 5}})), Scalar(1));
}

TEST(Membership, Examples) {
  Ring z = Ring::integers();
  auto c = submodule_membership(z, {vec({2, 0}), vec({0, 1})}, vec({4, 3}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, vec({2, 3}));
  EXPECT_FALSE(submodule_membership(z, {vec({2, 0})}, vec({1, 0})).has_value());
  auto d = submodule_membership(z, {vec({2}), vec({3})}, vec({1}));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ((*d)[0] * 2 + (*d)[1] * 3, Scalar(1));
  EXPECT_THROW(submodule_membership(z, {vec({1})}, vec({1, 2})), Error);
}

TEST(FreeSummand, Detection) {
  Ring z = Ring::integers();
  EXPECT_TRUE(is_free_summand_basis(z, {vec({1, 0}), vec({1, 1})}, 2));
  EXPECT_FALSE(is_free_summand_basis(z, {vec({1, 1}), vec({1, -1})}, 2));
  EXPECT_TRUE(is_free_summand_basis(Ring::rationals(), {vec({1, 1}), vec({1, -1})}, 2));
}
