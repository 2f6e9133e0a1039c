#pragma once

/**
 * @file smash.hpp
 * @brief Subalgebras U of H*, and the smash products #(H,B), B#U, A#H,
 * #^op(H,B) and B#^op U.
 *
 * Elements of H* are coordinate vectors in the dual basis d(x), so f(e_k)
 * is entry k. Hom(H,B) uses the flattening c * rank(B) + b, and B (x) U the
 * flattening b * rank(U) + u.
 */

#include <optional>
#include <string>
#include <vector>

#include "hopfdual/actions.hpp"
#include "hopfdual/crossed.hpp"
#include "hopfdual/hopf.hpp"
#include "hopfdual/report.hpp"
#include "hopfdual/solve.hpp"

namespace hopfdual {

enum class Side { Right, Left };

inline std::string to_string(Side s) { return s == Side::Right ? "right" : "left"; }

/// U inside H*, closed under convolution and under the regular action of
/// the declared side, with the solved coefficients kept as its own
/// structure constants.
struct SubalgebraU {
  HopfData hopf;
  std::vector<Vector> elements;  // spanning list, independent
  Side side = Side::Right;
  AlgebraData algebra;  // convolution on span(U), in U coordinates
  LinearMap action;     // right: U (x) H -> U, left: H (x) U -> U
  bool direct_summand = false;

  std::size_t rank() const { return elements.size(); }
  const FreeModule& carrier() const { return algebra.carrier(); }
  /// u(e_k) for the u-th spanning element.
  const Scalar& value(std::size_t u, std::size_t k) const { return elements[u][k]; }

  Scalar value(const Vector& u, std::size_t k) const {
    Scalar s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] != 0) s += u[i] * elements[i][k];
    return hopf.ring().normalize(s);
  }

  /// u . h (right side) or h . u (left side) for basis u and vector h.
  Vector act(std::size_t u, const Vector& h) const {
    const std::size_t m = rank(), rh = hopf.rank();
    Vector out(m);
    for (std::size_t x = 0; x < rh; ++x)
      if (h[x] != 0)
        axpy(out, h[x], action.matrix().column(side == Side::Right ? u * rh + x : x * m + u));
    hopf.ring().reduce_in_place(out);
    return out;
  }

  /// Back to H* coordinates.
  Vector to_dual(const Vector& u) const {
    Vector out(hopf.rank());
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] != 0) axpy(out, u[i], elements[i]);
    hopf.ring().reduce_in_place(out);
    return out;
  }
};

inline SubalgebraU make_subalgebra(const HopfData& h, const std::vector<Vector>& elements, Side side,
                                   std::vector<std::string> labels = {}) {
  const Ring& ring = h.ring();
  const std::size_t rh = h.rank(), m = elements.size();
  for (const auto& e : elements)
    require(e.size() == rh, ErrorKind::DimensionMismatch, "U element has wrong length");
  std::vector<Vector> norm = elements;
  for (auto& e : norm) ring.reduce_in_place(e);
  require(m == 0 || kernel(ring, Matrix::from_columns(rh, norm)).empty(), ErrorKind::ValidationError,
          "U spanning list is not independent");
  if (labels.empty())
    for (std::size_t i = 0; i < m; ++i) labels.push_back("u" + std::to_string(i));
  FreeModule carrier(ring, labels);

  HopfData dual = dual_hopf(h);
  RegularActions ra = regular_actions(h, dual.carrier());
  auto coords = [&](const Vector& v, const std::string& what) {
    auto c = submodule_membership(ring, norm, v);
    if (!c) fail(ErrorKind::ValidationError, "U is not closed: " + what);
    return *c;
  };
  Vector eps = coords(h.coalgebra().counit(), "eps not in U");
  AlgebraData alg = AlgebraData::from_products(
      carrier,
      [&](std::size_t i, std::size_t j) {
        return coords(dual.algebra().multiply(norm[i], norm[j]), labels[i] + " * " + labels[j]);
      },
      eps);
  Matrix act(m, m * rh);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t x = 0; x < rh; ++x) {
      Vector img = side == Side::Right ? ra.right(tensor(norm[u], h.algebra().basis(x)))
                                       : ra.left(tensor(h.algebra().basis(x), norm[u]));
      std::size_t col = side == Side::Right ? u * rh + x : x * m + u;
      act.set_column(col, coords(img, labels[u] + " . " + h.carrier().label(x)));
    }
  LinearMap action = side == Side::Right
                         ? LinearMap(tensor(carrier, h.carrier()), carrier, act)
                         : LinearMap(tensor(h.carrier(), carrier), carrier, act);
  return {h, norm, side, alg, action, is_free_summand_basis(ring, norm, rh)};
}

/// U = H* on the dual basis.
inline SubalgebraU full_dual(const HopfData& h, Side side) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < h.rank(); ++i) basis.push_back(unit_vector(h.rank(), i));
  return make_subalgebra(h, basis, side, dual_hopf(h).carrier().labels());
}

inline ValidationReport validate_subalgebra(const SubalgebraU& u) {
  ValidationReport r;
  r.append(validate_algebra(u.algebra), "U-");
  r.add("U-direct-summand", "span(U) is a direct summand of H*", u.direct_summand,
        u.direct_summand ? "" : "the spanning list has non-unit elementary divisors");
  return r;
}

// ---------------------------------------------------------------------------

namespace detail {

// terms (b0, b1, coeff) of rho(e_b)
struct CoactionTerm {
  std::size_t b0, b1;
  Scalar coeff;
};

inline std::vector<std::vector<CoactionTerm>> coaction_terms(const ComoduleAlgebraData& c) {
  const std::size_t rb = c.algebra.rank(), rh = c.hopf.rank();
  std::vector<std::vector<CoactionTerm>> out(rb);
  for (std::size_t b = 0; b < rb; ++b)
    for (std::size_t i = 0; i < rb * rh; ++i)
      if (c.coaction.matrix()(i, b) != 0) out[b].push_back({i / rh, i % rh, c.coaction.matrix()(i, b)});
  return out;
}

// eta_B o eps_H in Hom(H,B)
inline Vector hom_unit(const ComoduleAlgebraData& c) {
  return tensor(c.hopf.coalgebra().counit(), c.algebra.unit());
}

}  // namespace detail

/// #(H,B): (f ^* g)(h) = sum f(g(h2)<1> h1) g(h2)<0>.
inline AlgebraData hat_smash(const ComoduleAlgebraData& c) {
  const AlgebraData& b = c.algebra;
  const BialgebraData& h = c.hopf;
  const std::size_t rb = b.rank(), rh = h.rank();
  auto rho = detail::coaction_terms(c);
  return AlgebraData::from_products(
      hom_module(h.carrier(), b.carrier()),
      [&](std::size_t f, std::size_t g) {
        std::size_t fc = f / rb, fb = f % rb, gc = g / rb, gb = g % rb;
        Vector out(rh * rb);
        for (std::size_t x = 0; x < rh; ++x)
          for (const auto& t : h.coalgebra().coproduct(x)) {
            if (t.right != gc) continue;
            for (const auto& r : rho[gb])
              for (const auto& [idx, p] : h.algebra().basis_product(r.b1, t.left)) {
                if (idx != fc) continue;
                for (const auto& [k, q] : b.basis_product(fb, r.b0)) out[x * rb + k] += t.coeff * r.coeff * p * q;
              }
          }
        b.ring().reduce_in_place(out);
        return out;
      },
      detail::hom_unit(c));
}

/// #^op(H,B): (f ~* g)(h) = sum f(h2)<0> g(h1 f(h2)<1>).
inline AlgebraData op_hat_smash(const ComoduleAlgebraData& c) {
  const AlgebraData& b = c.algebra;
  const BialgebraData& h = c.hopf;
  const std::size_t rb = b.rank(), rh = h.rank();
  auto rho = detail::coaction_terms(c);
  return AlgebraData::from_products(
      hom_module(h.carrier(), b.carrier()),
      [&](std::size_t f, std::size_t g) {
        std::size_t fc = f / rb, fb = f % rb, gc = g / rb, gb = g % rb;
        Vector out(rh * rb);
        for (std::size_t x = 0; x < rh; ++x)
          for (const auto& t : h.coalgebra().coproduct(x)) {
            if (t.right != fc) continue;
            for (const auto& r : rho[fb])
              for (const auto& [idx, p] : h.algebra().basis_product(t.left, r.b1)) {
                if (idx != gc) continue;
                for (const auto& [k, q] : b.basis_product(r.b0, gb)) out[x * rb + k] += t.coeff * r.coeff * p * q;
              }
          }
        b.ring().reduce_in_place(out);
        return out;
      },
      detail::hom_unit(c));
}

/// B # U: (b # f)(b' # f') = sum b b'<0> # (f b'<1>) * f'.
inline AlgebraData right_smash(const ComoduleAlgebraData& c, const SubalgebraU& u) {
  if (u.side != Side::Right) fail(ErrorKind::SideMismatch, "B # U needs a right H-module U");
  const AlgebraData& b = c.algebra;
  const std::size_t m = u.rank(), rh = c.hopf.rank();
  auto rho = detail::coaction_terms(c);
  return AlgebraData::from_products(
      tensor(b.carrier(), u.carrier()),
      [&](std::size_t x, std::size_t y) {
        std::size_t bi = x / m, fi = x % m, bj = y / m, fj = y % m;
        Vector out(b.rank() * m);
        for (const auto& r : rho[bj]) {
          Vector bb = b.multiply(b.basis(bi), b.basis(r.b0));
          Vector ff = u.algebra.multiply(u.act(fi, unit_vector(rh, r.b1)), u.algebra.basis(fj));
          axpy(out, r.coeff, tensor(bb, ff));
        }
        b.ring().reduce_in_place(out);
        return out;
      },
      tensor(b.unit(), u.algebra.unit()));
}

/// B #^op U: (b # f)(b' # f') = sum b<0> b' # (b<1> f') * f.
inline AlgebraData op_smash(const ComoduleAlgebraData& c, const SubalgebraU& u) {
  if (u.side != Side::Left) fail(ErrorKind::SideMismatch, "B #^op U needs a left H-module U");
  const AlgebraData& b = c.algebra;
  const std::size_t m = u.rank(), rh = c.hopf.rank();
  auto rho = detail::coaction_terms(c);
  return AlgebraData::from_products(
      tensor(b.carrier(), u.carrier()),
      [&](std::size_t x, std::size_t y) {
        std::size_t bi = x / m, fi = x % m, bj = y / m, fj = y % m;
        Vector out(b.rank() * m);
        for (const auto& r : rho[bi]) {
          Vector bb = b.multiply(b.basis(r.b0), b.basis(bj));
          Vector ff = u.algebra.multiply(u.act(fj, unit_vector(rh, r.b1)), u.algebra.basis(fi));
          axpy(out, r.coeff, tensor(bb, ff));
        }
        b.ring().reduce_in_place(out);
        return out;
      },
      tensor(b.unit(), u.algebra.unit()));
}

/// A # H for a module algebra: (a # h)(a' # h') = sum a(h1 a') # h2 h'.
inline AlgebraData left_smash(const WeakActionData& w) {
  const AlgebraData& a = w.algebra;
  const BialgebraData& h = w.hopf;
  const std::size_t rh = h.rank();
  return AlgebraData::from_products(
      tensor(a.carrier(), h.carrier()),
      [&](std::size_t x, std::size_t y) {
        Vector out(a.rank() * rh);
        for (const auto& t : h.coalgebra().coproduct(x % rh)) {
          Vector av = a.multiply(a.basis(x / rh), w.act(t.left, a.basis(y / rh)));
          axpy(out, t.coeff, tensor(av, h.algebra().multiply(h.algebra().basis(t.right),
                                                             h.algebra().basis(y % rh))));
        }
        a.ring().reduce_in_place(out);
        return out;
      },
      tensor(a.unit(), h.algebra().unit()));
}

/// H as a right H-comodule algebra through Delta.
inline ComoduleAlgebraData regular_comodule(const BialgebraData& h) {
  return {h, h.algebra(), h.coalgebra().comult()};
}

/// f -> h = sum h1 f(h2), the action of H* on H, as a weak action of the
/// dual bialgebra.
inline WeakActionData hit_action(const HopfData& h) {
  HopfData d = dual_hopf(h);
  const std::size_t n = h.rank();
  Matrix m(n, n * n);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t x = 0; x < n; ++x)
      for (const auto& t : h.coalgebra().coproduct(x))
        if (t.right == f) m(t.left, f * n + x) += t.coeff;
  return {d.bialgebra(), h.algebra(),
          LinearMap(tensor(d.carrier(), h.carrier()), h.carrier(), m)};
}

struct SmashComparison {
  AlgebraData left;   // H # H* via the hit action
  AlgebraData right;  // H # H* via Delta and the right regular action
  bool equal() const { return left.mult().matrix() == right.mult().matrix() && left.unit() == right.unit(); }
};

inline SmashComparison smash_compare(const HopfData& h) {
  return {left_smash(hit_action(h)), right_smash(regular_comodule(h.bialgebra()), full_dual(h, Side::Right))};
}

}  // namespace hopfdual
