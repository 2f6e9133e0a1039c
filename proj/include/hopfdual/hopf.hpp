#pragma once

/**
 * @file hopf.hpp
 * @brief Convolution algebras, antipodes, twisted antipodes and duals.
 *
 * An element of Hom(C, A) is a LinearMap C -> A. As a coordinate vector it
 * is flattened with index c * rank(A) + a, the coefficient of e_a in f(e_c).
 */

#include <optional>
#include <string>
#include <vector>

#include "hopfdual/algebra.hpp"
#include "hopfdual/error.hpp"
#include "hopfdual/linalg.hpp"
#include "hopfdual/report.hpp"
#include "hopfdual/solve.hpp"

namespace hopfdual {

inline FreeModule hom_module(const FreeModule& c, const FreeModule& a) {
  std::vector<std::string> labels;
  for (const auto& x : c.labels())
    for (const auto& y : a.labels()) labels.push_back("[" + x + "->" + y + "]");
  return FreeModule(c.ring(), labels);
}

inline Vector hom_to_vector(const LinearMap& f) {
  const std::size_t rc = f.domain().rank(), ra = f.codomain().rank();
  Vector v(rc * ra);
  for (std::size_t c = 0; c < rc; ++c)
    for (std::size_t a = 0; a < ra; ++a) v[c * ra + a] = f.matrix()(a, c);
  return v;
}

inline LinearMap hom_from_vector(const FreeModule& c, const FreeModule& a, const Vector& v) {
  require(v.size() == c.rank() * a.rank(), ErrorKind::DimensionMismatch,
          "Hom vector has wrong length");
  Matrix m(a.rank(), c.rank());
  for (std::size_t i = 0; i < c.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) m(j, i) = v[i * a.rank() + j];
  return LinearMap(c, a, m);
}

/// (f * g)(c) = sum f(c1) g(c2).
inline LinearMap convolution(const CoalgebraData& c, const AlgebraData& a, const LinearMap& f,
                             const LinearMap& g) {
  require(f.domain().rank() == c.rank() && g.domain().rank() == c.rank() &&
              f.codomain().rank() == a.rank() && g.codomain().rank() == a.rank(),
          ErrorKind::DimensionMismatch, "convolution operands are not maps C -> A");
  Matrix out(a.rank(), c.rank());
  for (std::size_t h = 0; h < c.rank(); ++h) {
    Vector acc(a.rank());
    for (const auto& t : c.coproduct(h))
      axpy(acc, t.coeff, a.multiply(f.matrix().column(t.left), g.matrix().column(t.right)));
    a.ring().reduce_in_place(acc);
    out.set_column(h, acc);
  }
  return LinearMap(c.carrier(), a.carrier(), out);
}

/// eta o eps.
inline LinearMap convolution_unit(const CoalgebraData& c, const AlgebraData& a) {
  Matrix out(a.rank(), c.rank());
  for (std::size_t h = 0; h < c.rank(); ++h)
    for (std::size_t k = 0; k < a.rank(); ++k) out(k, h) = a.ring().mul(c.counit()[h], a.unit()[k]);
  return LinearMap(c.carrier(), a.carrier(), out);
}

/// Matrix of X |-> f * X on Hom(C, A) coordinates.
inline Matrix left_convolution_matrix(const CoalgebraData& c, const AlgebraData& a,
                                      const LinearMap& f) {
  const std::size_t rc = c.rank(), ra = a.rank();
  Matrix m(rc * ra, rc * ra);
  for (std::size_t h = 0; h < rc; ++h)
    for (const auto& t : c.coproduct(h)) {
      Vector fl = f.matrix().column(t.left);
      // contributes t.coeff * f(e_l) * X(e_r) to row block h
      for (std::size_t b = 0; b < ra; ++b) {
        Vector prod = a.multiply(fl, a.basis(b));
        for (std::size_t k = 0; k < ra; ++k)
          if (prod[k] != 0) m(h * ra + k, t.right * ra + b) += t.coeff * prod[k];
      }
    }
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a.ring().reduce_in_place(m(i, j));
  return m;
}

/// Two-sided convolution inverse: solves f * x = eta eps, then checks
/// x * f = eta eps.
inline LinearMap convolution_invert(const CoalgebraData& c, const AlgebraData& a,
                                   const LinearMap& f) {
  LinearMap unit = convolution_unit(c, a);
  SolveResult r = solve_linear(a.ring(), left_convolution_matrix(c, a, f), hom_to_vector(unit));
  if (!r.solvable())
    fail(ErrorKind::NotConvInvertible, "f * x = eta eps has no solution over " + a.ring().name());
  LinearMap x = hom_from_vector(c.carrier(), a.carrier(), *r.particular);
  // a two-sided inverse is unique, so a parametric family of right inverses
  // already rules one out
  if (r.status == SolveResult::Status::Parametric || convolution(c, a, x, f) != unit)
    fail(ErrorKind::OneSidedInverse, "f has a right convolution inverse but no left one");
  return x;
}

inline LinearMap compute_antipode(const BialgebraData& b) {
  return convolution_invert(b.coalgebra(), b.algebra(), LinearMap::identity(b.carrier()));
}

/// The antipode of H^op (same coalgebra).
inline LinearMap compute_twisted_antipode(const BialgebraData& b) {
  return convolution_invert(b.coalgebra(), opposite(b.algebra()), LinearMap::identity(b.carrier()));
}

/// Computes S, and S-bar when it exists. A supplied antipode is compared
/// against the computed one by validate_hopf, never trusted.
inline HopfData make_hopf(const BialgebraData& b) {
  LinearMap s = compute_antipode(b);
  std::optional<LinearMap> sbar;
  try {
    sbar = compute_twisted_antipode(b);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotConvInvertible && e.kind() != ErrorKind::OneSidedInverse) throw;
  }
  return HopfData(b, s, sbar);
}

namespace detail {

// sum over Delta(h) of op(left, right) in H, for antipode-type identities
template <class Fn>
Vector sum_over_coproduct(const HopfData& h, std::size_t basis, Fn&& fn) {
  Vector acc(h.rank());
  for (const auto& t : h.coalgebra().coproduct(basis)) axpy(acc, t.coeff, fn(t.left, t.right));
  h.ring().reduce_in_place(acc);
  return acc;
}

}  // namespace detail

inline ValidationReport validate_hopf(const HopfData& h, const std::optional<LinearMap>& supplied = {}) {
  ValidationReport r = validate_bialgebra(h.bialgebra());
  const AlgebraData& alg = h.algebra();
  const CoalgebraData& co = h.coalgebra();
  const Matrix& s = h.antipode().matrix();

  auto eps_one = [&](std::size_t b) {
    Vector v = alg.unit();
    for (auto& x : v) x = h.ring().mul(x, co.counit()[b]);
    return v;
  };

  r.run("antipode", "sum S(h1)h2 = eps(h)1 = sum h1S(h2)", [&]() -> std::optional<std::string> {
    for (std::size_t b = 0; b < h.rank(); ++b) {
      Vector left = detail::sum_over_coproduct(h, b, [&](std::size_t l, std::size_t rr) {
        return alg.multiply(s.column(l), alg.basis(rr));
      });
      Vector right = detail::sum_over_coproduct(h, b, [&](std::size_t l, std::size_t rr) {
        return alg.multiply(alg.basis(l), s.column(rr));
      });
      if (left != eps_one(b) || right != eps_one(b)) return h.carrier().label(b);
    }
    return std::nullopt;
  });

  r.run("antipode-anti-morphism", "S(hk) = S(k)S(h), Delta S = (S (x) S) Delta^cop",
        [&]() -> std::optional<std::string> {
          for (std::size_t i = 0; i < h.rank(); ++i) {
            for (std::size_t j = 0; j < h.rank(); ++j) {
              Vector lhs = h.antipode()(alg.multiply(alg.basis(i), alg.basis(j)));
              Vector rhs = alg.multiply(s.column(j), s.column(i));
              if (lhs != rhs) return "algebra " + join_labels(h.carrier(), {i, j});
            }
            Vector ds = co.comult()(s.column(i));
            Vector flipped(h.rank() * h.rank());
            for (const auto& t : co.coproduct(i))
              axpy(flipped, t.coeff, tensor(s.column(t.right), s.column(t.left)));
            h.ring().reduce_in_place(flipped);
            if (ds != flipped) return "coalgebra " + h.carrier().label(i);
            if (co.counit_of(s.column(i)) != co.counit()[i]) return "counit " + h.carrier().label(i);
          }
          if (h.antipode()(alg.unit()) != alg.unit()) return std::string("S(1) != 1");
          return std::nullopt;
        });

  if (supplied) {
    r.run("antipode-supplied", "supplied antipode equals the computed one",
          [&]() -> std::optional<std::string> {
            for (std::size_t b = 0; b < h.rank(); ++b)
              if (supplied->matrix().column(b) != s.column(b)) return h.carrier().label(b);
            return std::nullopt;
          });
  }

  if (h.twisted_antipode()) {
    const Matrix& sb = h.twisted_antipode()->matrix();
    r.run("twisted-antipode", "sum Sbar(h2)h1 = eps(h)1 = sum h2Sbar(h1)",
          [&]() -> std::optional<std::string> {
            for (std::size_t b = 0; b < h.rank(); ++b) {
              Vector left = detail::sum_over_coproduct(h, b, [&](std::size_t l, std::size_t rr) {
                return alg.multiply(sb.column(rr), alg.basis(l));
              });
              Vector right = detail::sum_over_coproduct(h, b, [&](std::size_t l, std::size_t rr) {
                return alg.multiply(alg.basis(rr), sb.column(l));
              });
              if (left != eps_one(b) || right != eps_one(b)) return h.carrier().label(b);
            }
            return std::nullopt;
          });
  }
  return r;
}

/// Maps between Hopf algebras: algebra iso plus coalgebra compatibility.
inline std::optional<std::string> check_hopf_morphism(const HopfData& src, const HopfData& tgt,
                                                      const LinearMap& f) {
  if (auto w = check_algebra_morphism(src.algebra(), tgt.algebra(), f)) return "algebra " + *w;
  LinearMap ff = kron(f, f);
  for (std::size_t b = 0; b < src.rank(); ++b) {
    Vector img = f.matrix().column(b);
    if (tgt.coalgebra().comult()(img) != ff(src.coalgebra().comult().matrix().column(b)))
      return "coproduct " + src.carrier().label(b);
    if (tgt.coalgebra().counit_of(img) != src.coalgebra().counit()[b])
      return "counit " + src.carrier().label(b);
  }
  return std::nullopt;
}

/// H* with (f*g)(h) = sum f(h1)g(h2), Delta dual to the product, counit
/// f |-> f(1) and antipode S^T. Basis: the dual basis d(x).
inline HopfData dual_hopf(const HopfData& h) {
  std::vector<std::string> labels;
  for (const auto& l : h.carrier().labels()) labels.push_back("d(" + l + ")");
  FreeModule dual(h.ring(), labels);
  AlgebraData alg(dual, h.coalgebra().comult().matrix().transpose(), h.coalgebra().counit());
  CoalgebraData co(dual, h.algebra().mult().matrix().transpose(), h.algebra().unit());
  BialgebraData b(alg, co);
  std::optional<LinearMap> sbar;
  if (h.twisted_antipode())
    sbar = LinearMap(dual, dual, h.twisted_antipode()->matrix().transpose());
  return HopfData(b, LinearMap(dual, dual, h.antipode().matrix().transpose()), sbar);
}

inline HopfData opposite_hopf(const HopfData& h) {
  // H^op has antipode S-bar and twisted antipode S
  return HopfData(opposite(h.bialgebra()), h.twisted_antipode_or_throw(), h.antipode());
}

}  // namespace hopfdual
